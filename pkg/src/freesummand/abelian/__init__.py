"""Exact calculus of groups ``Q^a + Z^r + finite``."""
from .completion import (
    CompletionDecomposition,
    DivisibilityPredicates,
    ICompleteGroup,
    completion_decomposition,
    divisibility_predicates,
    ext_completion,
    i_divisible_subgroup,
    i_torsion_subgroup,
)
from .enumeration import DEFAULT_BUDGET, brute_force_hom_count, hom_count_formula
from .groups import (
    AbGroupFQ,
    FinAbGroup,
    finite_abelian_groups,
    group_from_presentation,
    groups_up_to,
    m_torsion,
    maximal_divisible_subgroup,
    mod_m,
    multiple_subgroup,
    primary_part,
    torsion_subgroup,
)
from .matrices import IntMatrix, smith_normal_form
from .partial_fractions import (
    RationalMod1,
    decompose_denominator,
    partial_fraction_decompose,
    sum_mod1,
)
from .primes import PrimeSet

__all__ = [
    "AbGroupFQ",
    "CompletionDecomposition",
    "DEFAULT_BUDGET",
    "DivisibilityPredicates",
    "FinAbGroup",
    "ICompleteGroup",
    "IntMatrix",
    "PrimeSet",
    "RationalMod1",
    "brute_force_hom_count",
    "completion_decomposition",
    "decompose_denominator",
    "divisibility_predicates",
    "ext_completion",
    "finite_abelian_groups",
    "group_from_presentation",
    "groups_up_to",
    "hom_count_formula",
    "i_divisible_subgroup",
    "i_torsion_subgroup",
    "m_torsion",
    "maximal_divisible_subgroup",
    "mod_m",
    "multiple_subgroup",
    "partial_fraction_decompose",
    "primary_part",
    "smith_normal_form",
    "sum_mod1",
    "torsion_subgroup",
]
