"""Exact arithmetic behind motivic comparison ranges and Stiefel section decisions.

Subpackages and modules:

* :mod:`freesummand.abelian` - finitely generated abelian groups, Smith normal
  form, I-adic completion and partial fractions in Q/Z.
* :mod:`freesummand.james` - James numbers ``b_q`` and their factorizations.
* :mod:`freesummand.ranges` - range classifiers for realization and completion maps.
* :mod:`freesummand.chart` - region charts for spheres.
* :mod:`freesummand.splitting` - section and free-summand decisions.
"""
from .chart import Chart, chart
from .exceptions import (
    BoundExceeded,
    BudgetExceeded,
    FreeSummandError,
    HypothesisViolated,
    InvalidParameters,
    OutOfRange,
    PrimeOutsideSet,
)
from .james import JamesFactorization, james_divides, james_number, james_valuation, padic_valuation
from .ranges import (
    Assumptions,
    Bidegree,
    Convention,
    Verdict,
    VerdictKind,
    classify_sphere_unstable,
    classify_stable_realization,
    classify_stiefel_injective,
    classify_stiefel_surjective,
    convert,
)
from .splitting import (
    SectionDecision,
    SectionVerdict,
    decide_section,
    free_summand_decision,
    max_guaranteed_free_rank,
    verify_splitting_proof_inequalities,
)

__version__ = "0.1.0"

__all__ = [
    "Assumptions", "Bidegree", "BoundExceeded", "BudgetExceeded", "Chart", "Convention",
    "FreeSummandError", "HypothesisViolated", "InvalidParameters", "JamesFactorization",
    "OutOfRange", "PrimeOutsideSet", "SectionDecision", "SectionVerdict", "Verdict",
    "VerdictKind", "chart", "classify_sphere_unstable", "classify_stable_realization",
    "classify_stiefel_injective", "classify_stiefel_surjective", "convert", "decide_section",
    "free_summand_decision", "james_divides", "james_number", "james_valuation",
    "max_guaranteed_free_rank", "padic_valuation", "verify_splitting_proof_inequalities",
]
