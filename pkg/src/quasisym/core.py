"""Finite quasigroups as Cayley tables, their parastrophes and symmetry groups.

This is the exhaustive "oracle" layer: every property here is decided by
looking at the whole table, never by appeal to structure theory.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .errors import NotLatinSquare, QuasigroupError, SizeMismatch

__all__ = [
    "CayleyTable",
    "Permutation",
    "Sigma",
    "SymmetryClass",
    "IDENTITIES",
    "validate_quasigroup",
    "parastrophe",
    "symmetry_group",
    "generated_subgroup",
    "classify_by_oracle",
    "satisfies_identity",
    "identity_witness",
    "apply_isotopy",
    "relabel",
    "find_isomorphism",
    "parse_table",
    "load_table",
    "format_table",
    "table_from_function",
]


class CayleyTable:
    """An immutable n x n Latin square; ``t[x, y]`` is the product x·y.

    Constructing one validates the Latin property. Internal code that already
    knows its array is a Latin square goes through :meth:`trusted`.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        arr = _as_square(entries)
        _check_latin(arr)
        self._a = _freeze(arr)

    @classmethod
    def trusted(cls, arr: np.ndarray) -> "CayleyTable":
        obj = cls.__new__(cls)
        obj._a = _freeze(np.asarray(arr, dtype=np.int64))
        return obj

    @property
    def order(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only int64 array of shape (n, n)."""
        return self._a

    def __getitem__(self, xy):
        return int(self._a[xy])

    def __call__(self, x: int, y: int) -> int:
        return int(self._a[x, y])

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self.order, self._a.tobytes()))

    def __repr__(self):
        return f"CayleyTable({self.tolist()})"


def _as_square(entries) -> np.ndarray:
    try:
        arr = np.array(entries, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise QuasigroupError(f"table entries are not a rectangular integer array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise QuasigroupError(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise QuasigroupError(f"table entries must lie in 0..{n - 1}")
    return arr


def _check_latin(arr: np.ndarray) -> None:
    n = arr.shape[0]
    for kind, lines in (("row", arr), ("column", arr.T)):
        for i, line in enumerate(lines):
            counts = np.bincount(line, minlength=n)
            if counts.max() > 1:
                raise NotLatinSquare(kind, i, int(np.argmax(counts > 1)))


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.int64, copy=True)
    arr.setflags(write=False)
    return arr


def validate_quasigroup(entries) -> CayleyTable:
    """Validate a square array as a Latin square.

    Rows are scanned before columns; the first repeat found is reported in the
    raised :class:`NotLatinSquare`.
    """
    return CayleyTable(entries)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``0..n-1`` stored as its image list.

    ``p * q`` is composition with ``q`` applied first.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(len(images))):
            raise QuasigroupError(f"not a permutation of 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_function(cls, n: int, f) -> "Permutation":
        return cls(tuple(f(x) for x in range(n)))

    def __len__(self):
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise SizeMismatch("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[v] for v in other.images))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(len(self))
        for _ in range(k):
            out = self * out
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, v in enumerate(self.images):
            inv[v] = x
        return Permutation(tuple(inv))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64)

    def is_identity(self) -> bool:
        return all(x == v for x, v in enumerate(self.images))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * len(self.images)
        lengths = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            k, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths))

    def __repr__(self):
        return f"Permutation({list(self.images)})"


class Sigma(enum.Enum):
    """Elements of S3 acting on the three positions of ``x1 · x2 = x3``.

    ``s = (12)``, ``l = (13)``, ``r = (23)``. Composition ``a * b`` applies
    ``b`` first; under that rule ``sl = s * l = (1 3 2)`` and
    ``sr = s * r = (1 2 3)``.
    """

    ID = "id"
    S = "s"
    L = "l"
    R = "r"
    SL = "sl"
    SR = "sr"

    @classmethod
    def parse(cls, label: str) -> "Sigma":
        label = label.strip().lower()
        if label in ("iota", "ι", "e", "1"):
            return cls.ID
        return cls(label.replace("ℓ", "l"))

    @property
    def positions(self) -> tuple[int, int, int]:
        """0-based images of the positions 0, 1, 2."""
        return _SIGMA_POSITIONS[self]

    @property
    def cycle_notation(self) -> str:
        return _SIGMA_CYCLES[self]

    def __mul__(self, other: "Sigma") -> "Sigma":
        p, q = self.positions, other.positions
        return _SIGMA_BY_POSITIONS[tuple(p[q[i]] for i in range(3))]

    def inverse(self) -> "Sigma":
        p = self.positions
        inv = [0, 0, 0]
        for i, v in enumerate(p):
            inv[v] = i
        return _SIGMA_BY_POSITIONS[tuple(inv)]


_SIGMA_POSITIONS = {
    Sigma.ID: (0, 1, 2),
    Sigma.S: (1, 0, 2),
    Sigma.L: (2, 1, 0),
    Sigma.R: (0, 2, 1),
    Sigma.SL: (2, 0, 1),
    Sigma.SR: (1, 2, 0),
}
_SIGMA_BY_POSITIONS = {v: k for k, v in _SIGMA_POSITIONS.items()}
_SIGMA_CYCLES = {
    Sigma.ID: "()",
    Sigma.S: "(1 2)",
    Sigma.L: "(1 3)",
    Sigma.R: "(2 3)",
    Sigma.SL: "(1 3 2)",
    Sigma.SR: "(1 2 3)",
}


class SymmetryClass(enum.Enum):
    """The six blocks of quasigroups by symmetry group.

    Member order is the reporting order used by censuses.
    """

    STRICTLY_COMMUTATIVE = "strictly-commutative"
    STRICTLY_LEFT_SYMMETRIC = "strictly-left-symmetric"
    STRICTLY_RIGHT_SYMMETRIC = "strictly-right-symmetric"
    TOTALLY_SYMMETRIC = "totally-symmetric"
    STRICTLY_SEMI_SYMMETRIC = "strictly-semi-symmetric"
    ASYMMETRIC = "asymmetric"

    @property
    def code(self) -> str:
        return _CLASS_CODES[self]

    @property
    def group(self) -> frozenset:
        return _CLASS_GROUPS[self]

    @property
    def rank(self) -> int:
        return list(SymmetryClass).index(self)

    @classmethod
    def from_code(cls, code: str) -> "SymmetryClass":
        for member, c in _CLASS_CODES.items():
            if c == code:
                return member
        return cls(code)

    @classmethod
    def from_group(cls, group: Iterable[Sigma]) -> "SymmetryClass":
        group = frozenset(group)
        for member, g in _CLASS_GROUPS.items():
            if g == group:
                return member
        raise ValueError(f"not a subgroup of S3: {sorted(s.value for s in group)}")


_CLASS_CODES = {
    SymmetryClass.STRICTLY_COMMUTATIVE: "cs",
    SymmetryClass.STRICTLY_LEFT_SYMMETRIC: "ls",
    SymmetryClass.STRICTLY_RIGHT_SYMMETRIC: "rs",
    SymmetryClass.TOTALLY_SYMMETRIC: "ts",
    SymmetryClass.STRICTLY_SEMI_SYMMETRIC: "ss",
    SymmetryClass.ASYMMETRIC: "as",
}
_CLASS_GROUPS = {
    SymmetryClass.ASYMMETRIC: frozenset({Sigma.ID}),
    SymmetryClass.STRICTLY_COMMUTATIVE: frozenset({Sigma.ID, Sigma.S}),
    SymmetryClass.STRICTLY_LEFT_SYMMETRIC: frozenset({Sigma.ID, Sigma.R}),
    SymmetryClass.STRICTLY_RIGHT_SYMMETRIC: frozenset({Sigma.ID, Sigma.L}),
    SymmetryClass.STRICTLY_SEMI_SYMMETRIC: frozenset({Sigma.ID, Sigma.SL, Sigma.SR}),
    SymmetryClass.TOTALLY_SYMMETRIC: frozenset(Sigma),
}


def generated_subgroup(elements: Iterable[Sigma]) -> frozenset:
    """Closure of ``elements`` (plus the identity) under composition."""
    group = {Sigma.ID, *elements}
    while True:
        new = {a * b for a in group for b in group} - group
        if not new:
            return frozenset(group)
        group |= new


def parastrophe(t: CayleyTable, sigma: Sigma) -> CayleyTable:
    """The sigma-parastrophe of ``t``.

    Each triple ``(x0, x1, x2)`` with ``x0·x1 = x2`` is rearranged so that the
    entry in position ``i`` moves to position ``sigma(i)``; the rearranged
    triples form the graph of the new operation. With this rule
    ``parastrophe(parastrophe(t, b), a) == parastrophe(t, a * b)``.
    """
    n = t.order
    x0, x1 = np.divmod(np.arange(n * n), n)
    triple = (x0, x1, t.entries[x0, x1])
    moved = [None, None, None]
    for i, j in enumerate(sigma.positions):
        moved[j] = triple[i]
    out = np.empty((n, n), dtype=np.int64)
    out[moved[0], moved[1]] = moved[2]
    return CayleyTable.trusted(out)


def symmetry_group(t: CayleyTable) -> frozenset:
    """All sigma whose parastrophe reproduces ``t``."""
    return frozenset(s for s in Sigma if parastrophe(t, s) == t)


def classify_by_oracle(t: CayleyTable) -> SymmetryClass:
    return SymmetryClass.from_group(symmetry_group(t))


IDENTITIES = ("commutative", "left-symmetric", "right-symmetric", "semi-symmetric", "medial")


def identity_witness(t: CayleyTable, identity: str) -> Optional[tuple[int, ...]]:
    """First variable assignment violating ``identity``, or None if it holds."""
    a = t.entries
    n = t.order
    x, y = np.divmod(np.arange(n * n), n)
    if identity == "commutative":
        bad = a[x, y] != a[y, x]
    elif identity == "left-symmetric":
        bad = a[x, a[x, y]] != y
    elif identity == "right-symmetric":
        bad = a[a[x, y], y] != x
    elif identity == "semi-symmetric":
        bad = a[x, a[y, x]] != y
    elif identity == "medial":
        # one x-slice at a time so a witness stops the scan early
        y3, u3, v3 = np.unravel_index(np.arange(n**3), (n, n, n))
        for x0 in range(n):
            bad = a[a[x0, y3], a[u3, v3]] != a[a[x0, u3], a[y3, v3]]
            if bad.any():
                k = int(np.argmax(bad))
                return (x0, int(y3[k]), int(u3[k]), int(v3[k]))
        return None
    else:
        raise ValueError(f"unknown identity {identity!r}; expected one of {IDENTITIES}")
    if bad.any():
        k = int(np.argmax(bad))
        return (int(x[k]), int(y[k]))
    return None


def satisfies_identity(t: CayleyTable, identity: str) -> bool:
    """Exhaustively check one of the named identities.

    ``commutative``: xy = yx; ``left-symmetric``: x·xy = y;
    ``right-symmetric``: xy·y = x; ``semi-symmetric``: x·yx = y;
    ``medial``: xy·uv = xu·yv.
    """
    return identity_witness(t, identity) is None


def apply_isotopy(t: CayleyTable, alpha: Permutation, beta: Permutation, gamma: Permutation) -> CayleyTable:
    """Table of ``x ∘ y = gamma^-1(alpha(x) · beta(y))``."""
    n = t.order
    if not (len(alpha) == len(beta) == len(gamma) == n):
        raise SizeMismatch(f"isotopy components must all have degree {n}")
    g_inv = gamma.inverse().array
    out = g_inv[t.entries[np.ix_(alpha.array, beta.array)]]
    return CayleyTable.trusted(out)


def relabel(t: CayleyTable, phi: Permutation) -> CayleyTable:
    """Isomorphic copy of ``t`` with every element x renamed phi(x)."""
    n = t.order
    if len(phi) != n:
        raise SizeMismatch(f"relabeling must have degree {n}")
    p = phi.array
    out = np.empty((n, n), dtype=np.int64)
    out[np.ix_(p, p)] = p[t.entries]
    return CayleyTable.trusted(out)


def _element_profiles(t: CayleyTable) -> list:
    a = t.entries
    profiles = []
    for x in range(t.order):
        left = Permutation(tuple(a[x]))
        right = Permutation(tuple(a[:, x]))
        sq = int(a[x, x])
        profiles.append((left.cycle_type(), right.cycle_type(), sq == x, int(a[sq, sq]) == x))
    return profiles


def find_isomorphism(t1: CayleyTable, t2: CayleyTable) -> Optional[Permutation]:
    """A bijection phi with ``phi(t1[x, y]) == t2[phi(x), phi(y)]``, or None.

    Cheap invariants (symmetry group, per-element translation cycle types)
    are matched first; the remaining search is a complete backtracking over
    bijections in which every assignment is closed under the forced images of
    products.
    """
    n = t1.order
    if t2.order != n:
        return None
    if t1 == t2:
        return Permutation.identity(n)
    if symmetry_group(t1) != symmetry_group(t2):
        return None
    prof1, prof2 = _element_profiles(t1), _element_profiles(t2)
    if Counter(prof1) != Counter(prof2):
        return None
    candidates = [[y for y in range(n) if prof2[y] == prof1[x]] for x in range(n)]
    a, b = t1.entries, t2.entries

    def close(phi, used, x, y):
        phi = phi[:]
        used = used[:]
        phi[x] = y
        used[y] = True
        assigned = [u for u in range(n) if phi[u] >= 0]
        pending = [x]
        while pending:
            u = pending.pop()
            for v in assigned:
                for p, q in ((u, v), (v, u)):
                    z = a[p, q]
                    w = b[phi[p], phi[q]]
                    if phi[z] >= 0:
                        if phi[z] != w:
                            return None
                    else:
                        if used[w] or prof2[w] != prof1[z]:
                            return None
                        phi[z] = w
                        used[w] = True
                        assigned.append(z)
                        pending.append(z)
        return phi, used

    def search(phi, used):
        free = [u for u in range(n) if phi[u] < 0]
        if not free:
            return phi
        x = min(free, key=lambda u: len(candidates[u]))
        for y in candidates[x]:
            if used[y]:
                continue
            nxt = close(phi, used, x, y)
            if nxt is not None:
                found = search(*nxt)
                if found is not None:
                    return found
        return None

    found = search([-1] * n, [False] * n)
    return None if found is None else Permutation(tuple(found))


def parse_table(text: str) -> CayleyTable:
    """Parse the plain-text table format.

    First non-comment line is ``n``; then n rows of n integers. Lines starting
    with ``#`` are ignored. Any n distinct integer labels are accepted and
    renumbered 0..n-1 in increasing order.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise QuasigroupError("empty table file")
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise QuasigroupError(f"malformed table file: {exc}") from None
    if n <= 0 or len(rows) != n or any(len(r) != n for r in rows):
        raise QuasigroupError(f"expected {n} rows of {n} integers")
    labels = sorted({v for r in rows for v in r})
    if labels != list(range(n)):
        if len(labels) != n:
            raise QuasigroupError(f"table of order {n} uses {len(labels)} distinct labels")
        index = {v: i for i, v in enumerate(labels)}
        rows = [[index[v] for v in r] for r in rows]
    return CayleyTable(rows)


def load_table(path) -> CayleyTable:
    return parse_table(Path(path).read_text())


def format_table(t: CayleyTable, comment: Optional[str] = None) -> str:
    width = len(str(t.order - 1))
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(str(t.order))
    out.extend(" ".join(str(v).rjust(width) for v in row) for row in t.tolist())
    return "\n".join(out) + "\n"


def table_from_function(n: int, f) -> CayleyTable:
    """Build and validate the table of ``f(x, y)`` on ``0..n-1``."""
    return CayleyTable([[f(x, y) for y in range(n)] for x in range(n)])

