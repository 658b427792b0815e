"""Group isotopes: recovering the decomposition ``x·y = α(x) + a + β(y)``.

Additive notation is used throughout even for nonabelian groups; ``-x`` is
the group inverse and ``+`` need not commute.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import CayleyTable, Permutation
from .errors import (
    InternalVerificationFailed,
    NoNeutral,
    NotAssociative,
    NotAutotopism,
    NotGroupIsotope,
    NotUnitary,
    SizeMismatch,
)

__all__ = [
    "GroupStructure",
    "CanonicalDecomposition",
    "group_from_table",
    "associativity_witness",
    "is_automorphism",
    "is_anti_automorphism",
    "inner_shift",
    "negation",
    "principal_loop",
    "is_group_isotope",
    "canonical_decomposition",
    "build_isotope",
    "decompose_autotopism",
    "is_linear_isotope",
    "is_T_quasigroup",
]


@dataclass(frozen=True, eq=False)
class GroupStructure:
    table: CayleyTable
    neutral: int
    inverses: tuple[int, ...]
    abelian: bool

    @property
    def order(self) -> int:
        return self.table.order

    def add(self, x: int, y: int) -> int:
        return self.table(x, y)

    def neg(self, x: int) -> int:
        return self.inverses[x]

    def __eq__(self, other):
        if not isinstance(other, GroupStructure):
            return NotImplemented
        return self.table == other.table and self.neutral == other.neutral

    def __hash__(self):
        return hash((self.table, self.neutral))


def associativity_witness(a: np.ndarray) -> Optional[tuple[int, int, int]]:
    n = a.shape[0]
    x, y, z = np.unravel_index(np.arange(n**3), (n, n, n))
    bad = a[a[x, y], z] != a[x, a[y, z]]
    if bad.any():
        k = int(np.argmax(bad))
        return int(x[k]), int(y[k]), int(z[k])
    return None


def group_from_table(t: CayleyTable) -> GroupStructure:
    """Check that ``t`` is a group table and fill in neutral, inverses, abelian.

    Associativity is checked before the neutral element, so a non-associative
    table always reports :class:`NotAssociative` with a witness triple.
    """
    a = t.entries
    n = t.order
    witness = associativity_witness(a)
    if witness is not None:
        raise NotAssociative(witness)
    ar = np.arange(n)
    neutral = None
    for e in range(n):
        if np.array_equal(a[e], ar) and np.array_equal(a[:, e], ar):
            neutral = e
            break
    if neutral is None:
        raise NoNeutral()
    inverses = tuple(int(np.flatnonzero(a[x] == neutral)[0]) for x in range(n))
    abelian = bool(np.array_equal(a, a.T))
    return GroupStructure(t, neutral, inverses, abelian)


def _check_degree(g: GroupStructure, *perms: Permutation) -> None:
    for p in perms:
        if len(p) != g.order:
            raise SizeMismatch(f"permutation of degree {len(p)} on a group of order {g.order}")


def is_automorphism(g: GroupStructure, p: Permutation) -> bool:
    """p(x + y) == p(x) + p(y) for all x, y."""
    _check_degree(g, p)
    a, q = g.table.entries, p.array
    return bool(np.array_equal(q[a], a[np.ix_(q, q)]))


def is_anti_automorphism(g: GroupStructure, p: Permutation) -> bool:
    """p(x + y) == p(y) + p(x) for all x, y."""
    _check_degree(g, p)
    a, q = g.table.entries, p.array
    return bool(np.array_equal(q[a], a[np.ix_(q, q)].T))


def inner_shift(g: GroupStructure, a: int) -> Permutation:
    """x -> -a + x + a."""
    t = g.table.entries
    na = g.neg(a)
    return Permutation(tuple(int(t[t[na, x], a]) for x in range(g.order)))


def negation(g: GroupStructure) -> Permutation:
    """x -> -x."""
    return Permutation(g.inverses)


def principal_loop(t: CayleyTable, zero: int = 0) -> np.ndarray:
    """Table of ``x ∘ y = R^-1(x) · L^-1(y)`` with ``R(x) = x·zero``, ``L(y) = zero·y``.

    The result is a loop whose identity element is ``zero·zero``.
    """
    a = t.entries
    r_inv = np.argsort(a[:, zero])
    l_inv = np.argsort(a[zero, :])
    return a[np.ix_(r_inv, l_inv)]


def is_group_isotope(t: CayleyTable) -> bool:
    """True iff ``t`` is isotopic to a group.

    A loop isotopic to a group is isomorphic to it, so a single principal
    loop decides the question.
    """
    return associativity_witness(principal_loop(t, 0)) is None


@dataclass(frozen=True)
class CanonicalDecomposition:
    """``x·y = alpha(x) + a + beta(y)`` over ``group`` whose neutral is ``zero``."""

    group: GroupStructure
    alpha: Permutation
    beta: Permutation
    a: int
    zero: int

    def table(self) -> CayleyTable:
        return build_isotope(self.group, self.alpha, self.a, self.beta)

    def to_dict(self) -> dict:
        return {
            "order": self.group.order,
            "zero": self.zero,
            "a": self.a,
            "alpha": list(self.alpha.images),
            "beta": list(self.beta.images),
            "group_table": self.group.table.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CanonicalDecomposition":
        g = group_from_table(CayleyTable(data["group_table"]))
        if g.neutral != data["zero"]:
            raise InternalVerificationFailed(f"group neutral {g.neutral} != zero {data['zero']}")
        return cls(g, Permutation(data["alpha"]), Permutation(data["beta"]), int(data["a"]), int(data["zero"]))


def canonical_decomposition(t: CayleyTable, zero: int = 0) -> CanonicalDecomposition:
    """The unique decomposition of ``t`` whose group has ``zero`` as neutral.

    Writing 0 for ``zero``: a = 0·0; the principal loop ``x ∘ y`` has identity
    a; with w the ∘-inverse of 0, ``x + y := (x ∘ w) ∘ y`` is a group with
    neutral 0; then ``alpha(x) = x·0 - a`` and ``beta(y) = -a + 0·y``.
    """
    n = t.order
    if not 0 <= zero < n:
        raise ValueError(f"zero must lie in 0..{n - 1}")
    A = t.entries
    loop = principal_loop(t, zero)
    if associativity_witness(loop) is not None:
        raise NotGroupIsotope()
    a = int(A[zero, zero])
    w = int(np.flatnonzero(loop[zero] == a)[0])
    plus = loop[loop[:, w]]
    try:
        g = group_from_table(CayleyTable.trusted(plus))
    except (NotAssociative, NoNeutral) as exc:
        raise InternalVerificationFailed(f"derived operation is not a group: {exc}") from None
    neg_a = g.neg(a)
    alpha = Permutation(tuple(plus[A[:, zero], neg_a]))
    beta = Permutation(tuple(plus[neg_a, A[zero, :]]))
    d = CanonicalDecomposition(g, alpha, beta, a, zero)
    _verify_decomposition(t, d)
    return d


def _verify_decomposition(t: CayleyTable, d: CanonicalDecomposition) -> None:
    z = d.zero
    if d.group.neutral != z:
        raise InternalVerificationFailed(f"decomposition group has neutral {d.group.neutral}, expected {z}")
    if d.alpha(z) != z or d.beta(z) != z:
        raise InternalVerificationFailed("canonical coefficients are not unitary")
    if d.table() != t:
        raise InternalVerificationFailed("decomposition does not reproduce the table")


def build_isotope(g: GroupStructure, alpha: Permutation, a: int, beta: Permutation) -> CayleyTable:
    """Table of ``x·y = alpha(x) + a + beta(y)``; alpha and beta must fix the neutral."""
    _check_degree(g, alpha, beta)
    e = g.neutral
    for name, p in (("alpha", alpha), ("beta", beta)):
        if p(e) != e:
            raise NotUnitary(name, e, p(e))
    s = g.table.entries
    out = s[s[alpha.array, a][:, None], beta.array[None, :]]
    return CayleyTable.trusted(out)


def decompose_autotopism(g: GroupStructure, alpha: Permutation, beta: Permutation, gamma: Permutation):
    """Split an autotopism ``alpha(x) + beta(y) = gamma(x + y)`` of a group.

    Returns ``(theta, b, c)`` with theta an automorphism and
    ``alpha(x) = c + theta(x) - b``, ``beta(x) = b + theta(x)``,
    ``gamma(x) = c + theta(x)``.
    """
    _check_degree(g, alpha, beta, gamma)
    s = g.table.entries
    al, be, ga = alpha.array, beta.array, gamma.array
    bad = s[np.ix_(al, be)] != ga[s]
    if bad.any():
        x, y = np.unravel_index(int(np.argmax(bad)), bad.shape)
        raise NotAutotopism((int(x), int(y)))
    e = g.neutral
    c = gamma(e)
    b = beta(e)
    theta = Permutation(tuple(s[g.neg(c), ga]))
    th = theta.array
    ok = (
        is_automorphism(g, theta)
        and np.array_equal(al, s[s[c, th], g.neg(b)])
        and np.array_equal(be, s[b, th])
        and np.array_equal(ga, s[c, th])
    )
    if not ok:
        raise InternalVerificationFailed("autotopism decomposition does not recompose")
    return theta, b, c


def is_linear_isotope(t: CayleyTable) -> bool:
    """Group isotope whose canonical coefficients are automorphisms."""
    if not is_group_isotope(t):
        return False
    d = canonical_decomposition(t, 0)
    return is_automorphism(d.group, d.alpha) and is_automorphism(d.group, d.beta)


def is_T_quasigroup(t: CayleyTable) -> bool:
    """Linear isotope of an abelian group."""
    if not is_group_isotope(t):
        return False
    d = canonical_decomposition(t, 0)
    return d.group.abelian and is_automorphism(d.group, d.alpha) and is_automorphism(d.group, d.beta)
