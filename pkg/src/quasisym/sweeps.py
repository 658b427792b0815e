"""Verification corpus: exhaustive linear isotopes plus seeded random group isotopes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classify import check_corollaries, cross_check
from .core import CayleyTable, Permutation
from .groups import small_groups
from .isotope import GroupStructure, build_isotope, group_from_table
from .linear import LinearIsotopeSpec, linear_isotope_table, units


def random_unitary(g: GroupStructure, rng: random.Random) -> Permutation:
    """Uniform permutation fixing the neutral element."""
    rest = [x for x in range(g.order) if x != g.neutral]
    shuffled = rest[:]
    rng.shuffle(shuffled)
    images = list(range(g.order))
    for x, y in zip(rest, shuffled):
        images[x] = y
    return Permutation(tuple(images))


def random_isotope(g: GroupStructure, rng: random.Random):
    """``(alpha, a, beta, table)`` for a random isotope of ``g``."""
    alpha = random_unitary(g, rng)
    beta = random_unitary(g, rng)
    a = rng.randrange(g.order)
    return alpha, a, beta, build_isotope(g, alpha, a, beta)


def linear_corpus(max_modulus: int):
    """Every (α, β, d) over Z_m for 2 <= m <= max_modulus."""
    for m in range(2, max_modulus + 1):
        for a in units(m):
            for b in units(m):
                for d in range(m):
                    spec = LinearIsotopeSpec(m, a, b, d)
                    yield str(spec) + f" mod {m}", linear_isotope_table(spec)


@dataclass
class VerifyReport:
    checked: int = 0
    failures: list = field(default_factory=list)
    by_source: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, source: str, label: str, t: CayleyTable) -> None:
        self.checked += 1
        self.by_source[source] = self.by_source.get(source, 0) + 1
        cc = cross_check(t)
        if not cc.agree:
            self.failures.append(f"{label}: oracle={cc.oracle.value} criteria={cc.criteria.value} "
                                 f"zero_independent={cc.zero_independent}")
            return
        for v in check_corollaries(t).violations:
            self.failures.append(f"{label}: {v}")


def verify_corpus(max_order: int, samples: int = 100, seed: int = 0) -> VerifyReport:
    report = VerifyReport()
    for label, t in linear_corpus(max_order):
        report.record("linear", label, t)
    rng = random.Random(seed)
    for name, table in small_groups(max_order).items():
        g = group_from_table(table)
        for i in range(samples):
            *_, t = random_isotope(g, rng)
            report.record(name, f"{name} sample {i}", t)
    return report
