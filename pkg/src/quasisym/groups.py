"""Cayley tables of the small groups used for sweeps and fixtures."""

from __future__ import annotations

import itertools

import numpy as np

from .core import CayleyTable


def cyclic(n: int) -> CayleyTable:
    x = np.arange(n)
    return CayleyTable.trusted((x[:, None] + x[None, :]) % n)


def direct_product(g: CayleyTable, h: CayleyTable) -> CayleyTable:
    """Pairs (i, j) are encoded as ``i * |h| + j``."""
    m = h.order
    n = g.order * m
    idx = np.arange(n)
    i, j = np.divmod(idx, m)
    out = g.entries[i[:, None], i[None, :]] * m + h.entries[j[:, None], j[None, :]]
    return CayleyTable.trusted(out)


def _permutation_group(perms: list[tuple[int, ...]]) -> CayleyTable:
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    out = np.empty((n, n), dtype=np.int64)
    for a, p in enumerate(perms):
        for b, q in enumerate(perms):
            # p·q = p after q
            out[a, b] = index[tuple(p[v] for v in q)]
    return CayleyTable.trusted(out)


def symmetric(k: int) -> CayleyTable:
    """Permutations of k letters in lexicographic order; element 0 is the identity."""
    return _permutation_group(list(itertools.permutations(range(k))))


def dihedral(k: int) -> CayleyTable:
    """Symmetries of a regular k-gon (order 2k); element i < k is rotation by i."""
    rots = [tuple((v + i) % k for v in range(k)) for i in range(k)]
    refs = [tuple((i - v) % k for v in range(k)) for i in range(k)]
    return _permutation_group(rots + refs)


def quaternion() -> CayleyTable:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k encoded as 0..7."""
    names = ["1", "i", "j", "k"]
    unit = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in names for s in (1, -1)]
    index = {e: k for k, e in enumerate(elems)}
    out = np.empty((8, 8), dtype=np.int64)
    for a, (s1, u1) in enumerate(elems):
        for b, (s2, u2) in enumerate(elems):
            s3, u3 = unit[(u1, u2)]
            out[a, b] = index[(s1 * s2 * s3, u3)]
    return CayleyTable.trusted(out)


def small_groups(max_order: int = 8) -> dict[str, CayleyTable]:
    """Named representatives of the groups of order <= max_order.

    Complete up to order 9; larger orders are not covered.
    """
    z = cyclic
    catalogue = {f"Z{n}": z(n) for n in range(1, 10)}
    catalogue.update({
        "Z2xZ2": direct_product(z(2), z(2)),
        "S3": symmetric(3),
        "Z2xZ4": direct_product(z(2), z(4)),
        "Z2xZ2xZ2": direct_product(direct_product(z(2), z(2)), z(2)),
        "D4": dihedral(4),
        "Q8": quaternion(),
        "Z3xZ3": direct_product(z(3), z(3)),
    })
    return {name: t for name, t in catalogue.items() if t.order <= max_order}
