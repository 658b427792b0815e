"""Classify finite quasigroups by parastrophic symmetry; decompose group isotopes."""

__version__ = "0.1.0"

from .core import (
    CayleyTable,
    Permutation,
    Sigma,
    SymmetryClass,
    apply_isotopy,
    classify_by_oracle,
    find_isomorphism,
    format_table,
    load_table,
    parastrophe,
    parse_table,
    satisfies_identity,
    symmetry_group,
    table_from_function,
    validate_quasigroup,
)
from .isotope import (
    CanonicalDecomposition,
    GroupStructure,
    build_isotope,
    canonical_decomposition,
    decompose_autotopism,
    group_from_table,
    inner_shift,
    is_anti_automorphism,
    is_automorphism,
    is_group_isotope,
    is_linear_isotope,
    is_T_quasigroup,
)
from .classify import CriteriaReport, check_corollaries, classify_by_criteria, classify_table, cross_check
from .linear import (
    CensusReport,
    LinearIsotopeSpec,
    canonical_representatives,
    census,
    linear_isotope_table,
    semi_symmetric_set,
    small_order_census,
    sqrt_mod,
    verify_pairwise_nonisomorphic,
)

__all__ = [
    "apply_isotopy",
    "build_isotope",
    "canonical_decomposition",
    "canonical_representatives",
    "CanonicalDecomposition",
    "CayleyTable",
    "census",
    "CensusReport",
    "check_corollaries",
    "classify_by_criteria",
    "classify_by_oracle",
    "classify_table",
    "CriteriaReport",
    "cross_check",
    "decompose_autotopism",
    "find_isomorphism",
    "format_table",
    "group_from_table",
    "GroupStructure",
    "inner_shift",
    "is_anti_automorphism",
    "is_automorphism",
    "is_group_isotope",
    "is_linear_isotope",
    "is_T_quasigroup",
    "linear_isotope_table",
    "LinearIsotopeSpec",
    "load_table",
    "parastrophe",
    "parse_table",
    "Permutation",
    "satisfies_identity",
    "semi_symmetric_set",
    "Sigma",
    "small_order_census",
    "sqrt_mod",
    "symmetry_group",
    "SymmetryClass",
    "table_from_function",
    "validate_quasigroup",
    "verify_pairwise_nonisomorphic",
]
