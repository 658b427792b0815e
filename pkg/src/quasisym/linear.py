"""Linear isotopes ``x∘y = αx + βy + d`` of cyclic groups and the prime-order census."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .classify import classify_table
from .core import CayleyTable, SymmetryClass, classify_by_oracle, find_isomorphism, satisfies_identity
from .errors import InternalMismatch, NonUnitCoefficient, NotPrime
from .isotope import is_group_isotope

__all__ = [
    "LinearIsotopeSpec",
    "CensusReport",
    "is_prime",
    "units",
    "linear_isotope_table",
    "canonical_representatives",
    "sqrt_mod",
    "semi_symmetric_set",
    "closed_form_blocks",
    "expected_counts",
    "census",
    "latin_squares",
    "isomorphism_classes",
    "small_order_census",
    "verify_pairwise_nonisomorphic",
    "enumerate_linear_isotopes",
    "validate_enumeration",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(p)


def units(m: int) -> list[int]:
    if m == 1:
        return [0]
    return [u for u in range(1, m) if math.gcd(u, m) == 1]


@dataclass(frozen=True, order=True)
class LinearIsotopeSpec:
    """The operation ``x∘y = alpha·x + beta·y + d`` on Z_m."""

    m: int
    alpha: int
    beta: int
    d: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        for name in ("alpha", "beta", "d"):
            object.__setattr__(self, name, getattr(self, name) % self.m)
        for name in ("alpha", "beta"):
            if math.gcd(getattr(self, name), self.m) != 1:
                raise NonUnitCoefficient(name, getattr(self, name), self.m)

    @property
    def mu(self) -> int:
        return (self.alpha + self.beta - 1) % self.m

    def triple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.d)

    def __str__(self):
        return f"({self.alpha},{self.beta},{self.d})"


def linear_isotope_table(spec: LinearIsotopeSpec) -> CayleyTable:
    m = spec.m
    x = np.arange(m)
    return CayleyTable.trusted((spec.alpha * x[:, None] + spec.beta * x[None, :] + spec.d) % m)


def canonical_representatives(p: int) -> list[LinearIsotopeSpec]:
    """``{(α, β, 0)} ∪ {(α, 1-α, 1) : α = 2..p-1}``: one spec per isomorphism class."""
    _require_prime(p)
    m0 = [LinearIsotopeSpec(p, a, b, 0) for a in range(1, p) for b in range(1, p)]
    m1 = [LinearIsotopeSpec(p, a, 1 - a, 1) for a in range(2, p)]
    return m0 + m1


def sqrt_mod(n: int, p: int) -> Optional[int]:
    """Smallest k in 1..p-1 with k*k ≡ n (mod p), by scanning.

    ``n ≡ 0`` returns 0.
    """
    n %= p
    if n == 0:
        return 0
    for k in range(1, p):
        if k * k % p == n:
            return k
    return None


def semi_symmetric_set(p: int) -> list[LinearIsotopeSpec]:
    """Semi-symmetric (α, β, 0) over Z_p built from a square root k of p - 3.

    The two members are ``((1+k)/2, 2/(1+k), 0)`` and ``((1-k)/2, 2/(1-k), 0)``;
    empty when p - 3 is not a square mod p.
    """
    _require_prime(p)
    if p <= 3:
        raise ValueError("semi_symmetric_set needs p > 3")
    k = sqrt_mod(p - 3, p)
    if k is None:
        return []
    half = pow(2, -1, p)
    specs = [
        LinearIsotopeSpec(p, (1 + k) * half, 2 * pow(1 + k, -1, p), 0),
        LinearIsotopeSpec(p, (1 - k) * half, 2 * pow(1 - k, -1, p), 0),
    ]
    if specs[0] == specs[1]:
        raise InternalMismatch("semi-symmetric pair", "two distinct specs", specs)
    for s in specs:
        if not satisfies_identity(linear_isotope_table(s), "semi-symmetric"):
            raise InternalMismatch("semi-symmetric identity", "x·yx = y", s)
    return sorted(specs)


def closed_form_blocks(p: int) -> dict:
    """Class -> set of triples, written out directly from the closed-form description (p > 3)."""
    _require_prime(p)
    half = pow(2, -1, p)
    ss = {s.triple() for s in semi_symmetric_set(p)}
    low = range(1, p - 1)
    return {
        SymmetryClass.STRICTLY_COMMUTATIVE: {(a, a, 0) for a in low} | {(half, half, 1)},
        SymmetryClass.STRICTLY_LEFT_SYMMETRIC: {(a, p - 1, 0) for a in low} | {(2, p - 1, 1)},
        SymmetryClass.STRICTLY_RIGHT_SYMMETRIC: {(p - 1, a, 0) for a in low} | {(p - 1, 2, 1)},
        SymmetryClass.TOTALLY_SYMMETRIC: {(p - 1, p - 1, 0)},
        SymmetryClass.STRICTLY_SEMI_SYMMETRIC: ss,
        SymmetryClass.ASYMMETRIC: (
            {(a, (1 - a) % p, 1) for a in range(3, p - 1) if a != half}
            | ({(a, b, 0) for a in low for b in low if a != b} - ss)
        ),
    }


def expected_counts(p: int) -> dict:
    """Per-class counts from the residue case of p - 3 (p > 3)."""
    residue = sqrt_mod(p - 3, p) is not None
    return {
        SymmetryClass.STRICTLY_COMMUTATIVE: p - 1,
        SymmetryClass.STRICTLY_LEFT_SYMMETRIC: p - 1,
        SymmetryClass.STRICTLY_RIGHT_SYMMETRIC: p - 1,
        SymmetryClass.TOTALLY_SYMMETRIC: 1,
        SymmetryClass.STRICTLY_SEMI_SYMMETRIC: 2 if residue else 0,
        SymmetryClass.ASYMMETRIC: (p - 2) ** 2 - (5 if residue else 3),
    }


@dataclass(frozen=True)
class CensusReport:
    p: int
    representatives: dict
    counts: dict
    total: int
    k: Optional[int] = None
    latin_squares: Optional[int] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "k": self.k,
            "counts": {c.code: self.counts.get(c, 0) for c in SymmetryClass},
            "total": self.total,
            "representatives": {
                c.code: [list(s.triple()) for s in self.representatives.get(c, [])] for c in SymmetryClass
            },
        }
        if self.latin_squares is not None:
            out["latin_squares"] = self.latin_squares
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "CensusReport":
        p = data["p"]
        reps = {
            SymmetryClass.from_code(code): [LinearIsotopeSpec(p, *t) for t in triples]
            for code, triples in data["representatives"].items()
        }
        counts = {SymmetryClass.from_code(code): n for code, n in data["counts"].items()}
        return cls(p, reps, counts, data["total"], data.get("k"), data.get("latin_squares"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class", "alpha", "beta", "d"])
        for c in SymmetryClass:
            for s in self.representatives.get(c, []):
                w.writerow([c.code, s.alpha, s.beta, s.d])
        return buf.getvalue()

    def to_text(self) -> str:
        head = f"order {self.p}: {self.total} linear isotopes up to isomorphism"
        if self.k is not None:
            head += f"; sqrt(p-3) mod p = {self.k}"
        lines = [head]
        for c in SymmetryClass:
            reps = self.representatives.get(c, [])
            lines.append(f"{c.code}  {self.counts.get(c, 0):4d}  {' '.join(str(s) for s in reps)}".rstrip())
        return "\n".join(lines) + "\n"


def _group_by_class(specs, classify) -> dict:
    blocks = {c: [] for c in SymmetryClass}
    for s in specs:
        blocks[classify(linear_isotope_table(s))].append(s)
    return {c: sorted(v) for c, v in blocks.items()}


def census(p: int) -> CensusReport:
    """Classify every canonical representative of order p and check the result.

    The computed blocks are compared with :func:`closed_form_blocks` and the
    counts with :func:`expected_counts`; any difference raises
    :class:`InternalMismatch`.
    """
    _require_prime(p)
    if p <= 3:
        raise ValueError("census needs p > 3; use small_order_census for orders 2 and 3")
    blocks = _group_by_class(canonical_representatives(p), lambda t: classify_table(t).cls)
    expected = closed_form_blocks(p)
    for c in SymmetryClass:
        got = {s.triple() for s in blocks[c]}
        if got != expected[c]:
            raise InternalMismatch(c.code, sorted(expected[c]), sorted(got))
    counts = {c: len(v) for c, v in blocks.items()}
    want = expected_counts(p)
    if counts != want:
        raise InternalMismatch("counts", want, counts)
    total = sum(counts.values())
    if total != p * p - p - 1:
        raise InternalMismatch("total", p * p - p - 1, total)
    return CensusReport(p, blocks, counts, total, sqrt_mod(p - 3, p))


def latin_squares(n: int) -> Iterator[CayleyTable]:
    """Every Latin square of order n, in row-major lexicographic order."""
    grid = np.full((n, n), -1, dtype=np.int64)
    row_used = np.zeros((n, n), dtype=bool)
    col_used = np.zeros((n, n), dtype=bool)

    def fill(cell):
        if cell == n * n:
            yield CayleyTable.trusted(grid.copy())
            return
        i, j = divmod(cell, n)
        for v in range(n):
            if row_used[i, v] or col_used[j, v]:
                continue
            grid[i, j] = v
            row_used[i, v] = col_used[j, v] = True
            yield from fill(cell + 1)
            row_used[i, v] = col_used[j, v] = False
        grid[i, j] = -1

    yield from fill(0)


def isomorphism_classes(tables) -> list[list[CayleyTable]]:
    """Partition tables into isomorphism classes by pairwise search."""
    classes: list[list[CayleyTable]] = []
    for t in tables:
        for cl in classes:
            if find_isomorphism(cl[0], t) is not None:
                cl.append(t)
                break
        else:
            classes.append([t])
    return classes


_SMALL_ORDER_BLOCKS = {
    2: {SymmetryClass.TOTALLY_SYMMETRIC: {(1, 1, 0)}},
    3: {
        SymmetryClass.STRICTLY_COMMUTATIVE: {(1, 1, 0)},
        SymmetryClass.STRICTLY_LEFT_SYMMETRIC: {(1, 2, 0)},
        SymmetryClass.STRICTLY_RIGHT_SYMMETRIC: {(2, 1, 0)},
        SymmetryClass.TOTALLY_SYMMETRIC: {(2, 2, 0), (2, 2, 1)},
    },
}


def small_order_census(n: int) -> CensusReport:
    """Census of orders 2 and 3 from all Latin squares, reduced by isomorphism.

    Each isomorphism class must contain exactly one canonical representative;
    classes are assigned by the parastrophe oracle.
    """
    if n not in (2, 3):
        raise ValueError("small_order_census covers orders 2 and 3 only")
    squares = list(latin_squares(n))
    for t in squares:
        if not is_group_isotope(t):
            raise InternalMismatch("group isotope", "every square", t.tolist())
    classes = isomorphism_classes(squares)
    specs = canonical_representatives(n)
    hits = []
    for s in specs:
        t = linear_isotope_table(s)
        idx = [i for i, cl in enumerate(classes) if find_isomorphism(t, cl[0]) is not None]
        if len(idx) != 1:
            raise InternalMismatch(f"class of {s}", "exactly one", idx)
        hits.append(idx[0])
    if sorted(hits) != list(range(len(classes))):
        raise InternalMismatch("isomorphism classes", len(classes), sorted(hits))
    blocks = _group_by_class(specs, classify_by_oracle)
    expected = _SMALL_ORDER_BLOCKS[n]
    for c in SymmetryClass:
        got = {s.triple() for s in blocks[c]}
        if got != expected.get(c, set()):
            raise InternalMismatch(c.code, sorted(expected.get(c, set())), sorted(got))
    counts = {c: len(v) for c, v in blocks.items()}
    return CensusReport(n, blocks, counts, len(specs), None, len(squares))


def verify_pairwise_nonisomorphic(specs):
    """``(True, None)`` if no two specs give isomorphic tables, else ``(False, (s1, s2, phi))``."""
    specs = list(specs)
    if len({s.m for s in specs}) > 1:
        raise ValueError("specs must share one modulus")
    tables = [linear_isotope_table(s) for s in specs]
    for i in range(len(specs)):
        for j in range(i + 1, len(specs)):
            phi = find_isomorphism(tables[i], tables[j])
            if phi is not None:
                return False, (specs[i], specs[j], phi)
    return True, None


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def enumerate_linear_isotopes(m: int) -> list[LinearIsotopeSpec]:
    """One (α, β, d) per isomorphism class of linear isotopes of Z_m.

    Translating by c shifts d by a multiple of μ = α+β-1, and scaling by a
    unit multiplies d, so d is taken among the divisors of g = gcd(μ, m),
    with g itself written as 0.
    """
    out = []
    for a in units(m):
        for b in units(m):
            g = math.gcd((a + b - 1) % m, m)
            for d in _divisors(g):
                out.append(LinearIsotopeSpec(m, a, b, 0 if d == g else d))
    return sorted(out)


def validate_enumeration(m: int):
    """Brute-force check of :func:`enumerate_linear_isotopes` for small m.

    Every (α, β, d) table must be isomorphic to exactly one enumerated spec.
    Returns ``(ok, problems)``.
    """
    reps = enumerate_linear_isotopes(m)
    rep_tables = [linear_isotope_table(s) for s in reps]
    problems = []
    for a in units(m):
        for b in units(m):
            for d in range(m):
                t = linear_isotope_table(LinearIsotopeSpec(m, a, b, d))
                hits = [reps[i] for i, r in enumerate(rep_tables) if find_isomorphism(t, r) is not None]
                if len(hits) != 1:
                    problems.append(((a, b, d), hits))
    return not problems, problems
