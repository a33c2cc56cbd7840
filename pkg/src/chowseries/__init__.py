"""Exact monoid-graded power series with Laurent-polynomial coefficients,
series of cycle spaces on projective space, and rationality certification."""

from .errors import (
    ChowSeriesError,
    InconclusiveError,
    InsufficientTruncationError,
    NotInvertibleError,
    RankMismatchError,
    TermBudgetError,
)
from .generators import (
    BettiProfile,
    DivisorChowFamily,
    divisor_chow_series,
    euler_chow_series,
    gap_exponent_fn,
    zero_cycle_series,
)
from .growth import PolynomialGrowth, ScaledBinomial, unbounded_differences
from .laurent import LaurentPoly, ONE, S, ZERO, binomial, geometric_sum, s_power
from .motives import MotiveClass, TwistedPresentation
from .rationality import (
    BivariateView,
    GapCertificate,
    GrowthEvidence,
    GrowthKind,
    RecurrenceWitness,
    ReportConfig,
    Verdict,
    VerdictKind,
    bivariate_view,
    certify_unbounded,
    clear_geometric_factor,
    denominator_from_recurrence,
    extract_gaps,
    find_recurrence,
    rationality_report,
    refute_denominator,
)
from .series import (
    GradedPolynomial,
    GradedSeries,
    t_polynomial,
    witness_check,
)

__version__ = "0.1.0"

__all__ = [
    "BettiProfile",
    "BivariateView",
    "ChowSeriesError",
    "DivisorChowFamily",
    "GapCertificate",
    "GradedPolynomial",
    "GradedSeries",
    "GrowthEvidence",
    "GrowthKind",
    "InconclusiveError",
    "InsufficientTruncationError",
    "LaurentPoly",
    "MotiveClass",
    "NotInvertibleError",
    "ONE",
    "PolynomialGrowth",
    "RankMismatchError",
    "RecurrenceWitness",
    "ReportConfig",
    "S",
    "ScaledBinomial",
    "TermBudgetError",
    "TwistedPresentation",
    "Verdict",
    "VerdictKind",
    "ZERO",
    "binomial",
    "bivariate_view",
    "certify_unbounded",
    "clear_geometric_factor",
    "denominator_from_recurrence",
    "divisor_chow_series",
    "euler_chow_series",
    "extract_gaps",
    "find_recurrence",
    "gap_exponent_fn",
    "geometric_sum",
    "rationality_report",
    "refute_denominator",
    "s_power",
    "t_polynomial",
    "unbounded_differences",
    "witness_check",
    "zero_cycle_series",
]
