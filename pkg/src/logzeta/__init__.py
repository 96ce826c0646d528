"""Exact evaluation of logarithmic integrals

    I_{n,m}^(i) = int_0^1 x^i ln^n(x) ln^m(1-x) dx

as rational polynomials in zeta(2), zeta(3), ..., through tiered binomial
coefficients, with numeric oracles and the Quicksort moment application.
"""

from .algebra import TruncatedSeries, ZetaMonomial, ZetaPolynomial, zeta
from .errors import AccuracyError, ConsistencyError, DivergentError, DomainError
from .logint import (
    LogIntegralKey,
    i_exact,
    s_exact,
    s_minus_one,
    s_negative,
    s_one_step,
    s_rec,
    s_value,
    t_value,
    variant_integral,
)
from .mzv import HookIndex, kaneko_sakata_terms, mzv_leading, zeta_hook
from .nielsen import NielsenKey, multiple_polylog, nielsen_boundary, nielsen_recurrence_residual, nielsen_series
from .numeric import (
    ComparisonReport,
    NumericValue,
    compare,
    eval_zeta_polynomial,
    mzv_numeric,
    quad_logint,
    zeta_numeric,
)
from .quicksort import (
    CumulantTable,
    MomentTable,
    cumulants_from_moments,
    entropy_integral,
    finite_expectation,
    gumbel_cumulants,
    moments_from_cumulants,
    qs_constant_term,
    qs_moment,
    qs_normalized_ct,
    shifted_cumulants,
    simulate,
)
from .tiered import row_sum, tier_gf, tier_sum

__version__ = "0.1.0"

__all__ = [
    "TruncatedSeries",
    "ZetaMonomial",
    "ZetaPolynomial",
    "zeta",
    "AccuracyError",
    "ConsistencyError",
    "DivergentError",
    "DomainError",
    "LogIntegralKey",
    "i_exact",
    "s_exact",
    "s_minus_one",
    "s_negative",
    "s_one_step",
    "s_rec",
    "s_value",
    "t_value",
    "variant_integral",
    "HookIndex",
    "kaneko_sakata_terms",
    "mzv_leading",
    "zeta_hook",
    "NielsenKey",
    "multiple_polylog",
    "nielsen_boundary",
    "nielsen_recurrence_residual",
    "nielsen_series",
    "ComparisonReport",
    "NumericValue",
    "compare",
    "eval_zeta_polynomial",
    "mzv_numeric",
    "quad_logint",
    "zeta_numeric",
    "CumulantTable",
    "MomentTable",
    "cumulants_from_moments",
    "entropy_integral",
    "finite_expectation",
    "gumbel_cumulants",
    "moments_from_cumulants",
    "qs_constant_term",
    "qs_moment",
    "qs_normalized_ct",
    "shifted_cumulants",
    "simulate",
    "row_sum",
    "tier_gf",
    "tier_sum",
]
