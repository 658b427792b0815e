"""Symmetry class of a group isotope read off its canonical decomposition.

The decision uses only the group and the coefficients (alpha, beta, a); the
parastrophe oracle in :mod:`quasisym.core` is the independent second route
that :func:`cross_check` compares against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    CayleyTable,
    Permutation,
    Sigma,
    SymmetryClass,
    classify_by_oracle,
    generated_subgroup,
    satisfies_identity,
)
from .errors import NotGroupIsotope
from .isotope import (
    CanonicalDecomposition,
    canonical_decomposition,
    inner_shift,
    is_anti_automorphism,
    is_automorphism,
    is_group_isotope,
    negation,
)

__all__ = [
    "CRITERIA",
    "CriteriaReport",
    "CrossCheck",
    "CorollaryReport",
    "classify_by_criteria",
    "classify_table",
    "cross_check",
    "check_corollaries",
]

CRITERIA = (
    "abelian",
    "beta-eq-alpha",
    "beta-eq-neg-id",
    "alpha-eq-neg-id",
    "alpha-anti-automorphism",
    "beta-eq-alpha-inverse",
    "alpha-cubed-eq-neg-inner-inverse",
    "alpha-a-eq-neg-a",
)

SYMMETRIC_CLASSES = frozenset({
    SymmetryClass.STRICTLY_COMMUTATIVE,
    SymmetryClass.STRICTLY_LEFT_SYMMETRIC,
    SymmetryClass.STRICTLY_RIGHT_SYMMETRIC,
    SymmetryClass.TOTALLY_SYMMETRIC,
})
NONABELIAN_CLASSES = frozenset({SymmetryClass.STRICTLY_SEMI_SYMMETRIC, SymmetryClass.ASYMMETRIC})


@dataclass(frozen=True)
class CriteriaReport:
    cls: SymmetryClass
    checks: dict
    zero_independent: Optional[bool] = None
    # item-6 condition with "or" binding loosest; diagnostic only
    literal_asymmetry: bool = field(default=False, compare=False)

    def to_dict(self) -> dict:
        return {"class": self.cls.value, "checks": dict(self.checks), "zero_independent": self.zero_independent}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _criteria(d: CanonicalDecomposition) -> dict:
    g, alpha, beta, a = d.group, d.alpha, d.beta, d.a
    neg = negation(g)
    # -I_a^{-1}: x -> -(a + x - a)
    neg_inner_inv = neg * inner_shift(g, a).inverse()
    return {
        "abelian": g.abelian,
        "beta-eq-alpha": beta == alpha,
        "beta-eq-neg-id": beta == neg,
        "alpha-eq-neg-id": alpha == neg,
        "alpha-anti-automorphism": is_anti_automorphism(g, alpha),
        "beta-eq-alpha-inverse": beta == alpha.inverse(),
        "alpha-cubed-eq-neg-inner-inverse": alpha ** 3 == neg_inner_inv,
        "alpha-a-eq-neg-a": alpha(a) == g.neg(a),
    }


def classify_by_criteria(d: CanonicalDecomposition) -> CriteriaReport:
    """Classify from the decomposition alone.

    Each satisfied criterion contributes a symmetry (commutative: s,
    left symmetric: r, right symmetric: l, semi-symmetric: the 3-cycles); the
    class is the one whose group is generated by them, so a table that is
    both commutative and right symmetric lands in totally-symmetric.
    """
    c = _criteria(d)
    commutative = c["abelian"] and c["beta-eq-alpha"]
    left = c["abelian"] and c["beta-eq-neg-id"]
    right = c["abelian"] and c["alpha-eq-neg-id"]
    semi = (
        c["alpha-anti-automorphism"]
        and c["beta-eq-alpha-inverse"]
        and c["alpha-cubed-eq-neg-inner-inverse"]
        and c["alpha-a-eq-neg-a"]
    )
    gens = set()
    if commutative:
        gens.add(Sigma.S)
    if left:
        gens.add(Sigma.R)
    if right:
        gens.add(Sigma.L)
    if semi:
        gens.add(Sigma.SL)
    cls = SymmetryClass.from_group(generated_subgroup(gens))
    chain = not c["alpha-eq-neg-id"] and not c["beta-eq-alpha"] and not c["beta-eq-neg-id"]
    literal = (not c["abelian"]) or (chain and not semi)
    return CriteriaReport(cls, c, None, literal)


def classify_table(t: CayleyTable, zero: int = 0, all_zeros: bool = False) -> CriteriaReport:
    """Decompose at ``zero`` and classify.

    With ``all_zeros`` every element is tried as the decomposition zero and
    ``zero_independent`` records whether they all gave the same class.
    """
    if not is_group_isotope(t):
        raise NotGroupIsotope()
    report = classify_by_criteria(canonical_decomposition(t, zero))
    if not all_zeros:
        return report
    same = all(
        classify_by_criteria(canonical_decomposition(t, z)).cls == report.cls
        for z in range(t.order)
        if z != zero
    )
    return CriteriaReport(report.cls, report.checks, same, report.literal_asymmetry)


@dataclass(frozen=True)
class CrossCheck:
    oracle: SymmetryClass
    criteria: Optional[SymmetryClass]
    agree: bool
    zero_independent: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "oracle": self.oracle.value,
            "criteria": None if self.criteria is None else self.criteria.value,
            "agree": self.agree,
            "zero_independent": self.zero_independent,
        }


def cross_check(t: CayleyTable) -> CrossCheck:
    """Compare the parastrophe oracle with the criteria at every zero.

    For tables that are not group isotopes there is nothing to compare:
    ``criteria`` is None and ``agree`` is vacuously True.
    """
    oracle = classify_by_oracle(t)
    if not is_group_isotope(t):
        return CrossCheck(oracle, None, True, None)
    classes = {classify_by_criteria(canonical_decomposition(t, z)).cls for z in range(t.order)}
    first = classify_by_criteria(canonical_decomposition(t, 0)).cls
    return CrossCheck(oracle, first, classes == {oracle}, len(classes) == 1)


@dataclass(frozen=True)
class CorollaryReport:
    facts: dict
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def _commute(p: Permutation, q: Permutation) -> bool:
    return p * q == q * p


def check_corollaries(t: CayleyTable) -> CorollaryReport:
    """Evaluate the consequences of the criteria as implications on ``t``.

    Classes come from the oracle so the implications are tested against the
    table itself. Any entry in ``violations`` indicates a bug.
    """
    if not is_group_isotope(t):
        raise NotGroupIsotope()
    d = canonical_decomposition(t, 0)
    g, alpha, beta = d.group, d.alpha, d.beta
    neg = negation(g)
    linear = is_automorphism(g, alpha) and is_automorphism(g, beta)
    central = linear and g.abelian
    medial = satisfies_identity(t, "medial")
    oracle = classify_by_oracle(t)
    criteria = classify_by_criteria(d)
    c = criteria.checks
    facts = {
        "abelian": g.abelian,
        "linear": linear,
        "t_quasigroup": central,
        "medial": medial,
        "class": oracle.value,
    }
    violations = []
    if criteria.cls != oracle:
        violations.append(f"criteria class {criteria.cls.value} != oracle class {oracle.value}")
    if not g.abelian and oracle not in NONABELIAN_CLASSES:
        violations.append("isotope of a nonabelian group is neither semi-symmetric nor asymmetric")
    if linear and oracle in SYMMETRIC_CLASSES and not medial:
        violations.append("commutative/left/right/totally symmetric linear isotope is not medial")
    if linear and not medial and oracle not in NONABELIAN_CLASSES:
        violations.append("nonmedial linear isotope is neither semi-symmetric nor asymmetric")
    if central and not medial and oracle is not SymmetryClass.ASYMMETRIC:
        violations.append("nonmedial T-quasigroup is not asymmetric")
    if central and medial != _commute(alpha, beta):
        violations.append("T-quasigroup mediality disagrees with commuting coefficients")
    if g.abelian:
        inv_ok = c["beta-eq-alpha-inverse"]
        cube_ok = alpha ** 3 == neg
        a_ok = c["alpha-a-eq-neg-a"]
        semi_thm = (
            c["alpha-anti-automorphism"] and inv_ok and c["alpha-cubed-eq-neg-inner-inverse"] and a_ok
        )
        semi_abelian = is_automorphism(g, alpha) and inv_ok and cube_ok and a_ok
        facts["semi_symmetric_general"] = semi_thm
        facts["semi_symmetric_abelian"] = semi_abelian
        if semi_thm != semi_abelian:
            violations.append("abelian semi-symmetry criterion disagrees with the general one")
        if semi_abelian != (Sigma.SL in oracle.group):
            violations.append("abelian semi-symmetry criterion disagrees with the oracle")
        chain = not c["alpha-eq-neg-id"] and not c["beta-eq-alpha"] and not c["beta-eq-neg-id"]
        asym_abelian = chain and not semi_abelian
        if asym_abelian != (oracle is SymmetryClass.ASYMMETRIC):
            violations.append("abelian asymmetry criterion disagrees with the oracle")
        if central:
            asym_central = chain and (not inv_ok or not cube_ok or not a_ok)
            if asym_central != (oracle is SymmetryClass.ASYMMETRIC):
                violations.append("T-quasigroup asymmetry criterion disagrees with the oracle")
    return CorollaryReport(facts, violations)
