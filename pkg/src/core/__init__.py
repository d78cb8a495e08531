# 核心模块
"""矩与累积量的符号计算核心"""

from src.core.combinat import (
    Pairing,
    Partition,
    double_factorial,
    enumerate_pairings,
    enumerate_set_partitions,
    enumerate_scheme_pairings,
    enumerate_avoiding_pairings,
)
from src.core.polyalg import (
    CovSymbol,
    Poly,
    monomial,
    poly_add,
    poly_mul,
    poly_scale,
    substitute_diagonal_one,
    standardize,
    term_count,
    relabel,
)
from src.core.moments import IndexList, MomentCache, moment, moment_memoized, moment_via_pairings
from src.core.cumulants import (
    Group,
    CumulantQuery,
    CumulantEngine,
    cumulant,
    cumulant_doublets_direct,
    moment_expansion,
    check_unit_coefficient_conjecture,
    moments_to_cumulants_structural_check,
)
from src.core.rules import RuleKind, apply_mixed_rules, cumulant_with_rules

__all__ = [
    "Pairing",
    "Partition",
    "double_factorial",
    "enumerate_pairings",
    "enumerate_set_partitions",
    "enumerate_scheme_pairings",
    "enumerate_avoiding_pairings",
    "CovSymbol",
    "Poly",
    "monomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "substitute_diagonal_one",
    "standardize",
    "term_count",
    "relabel",
    "IndexList",
    "MomentCache",
    "moment",
    "moment_memoized",
    "moment_via_pairings",
    "Group",
    "CumulantQuery",
    "CumulantEngine",
    "cumulant",
    "cumulant_doublets_direct",
    "moment_expansion",
    "check_unit_coefficient_conjecture",
    "moments_to_cumulants_structural_check",
    "RuleKind",
    "apply_mixed_rules",
    "cumulant_with_rules",
]
