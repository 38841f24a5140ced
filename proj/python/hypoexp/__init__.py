"""Hypoexponential CDF toolkit.

Exact routes (closed form with stability diagnostics, matrix-exponential
survival), a bounded-relative-error importance-sampling estimator, and the
benchmark harness around them. Everything is computed by the C++ core.
"""

from ._core import (
    CSV_HEADER,
    FLOOR_THRESHOLD,
    EstimateResult,
    ExactResult,
    ExactRoute,
    HypoexpError,
    ModelSpec,
    Problem,
    RossResult,
    StabilityReport,
    SurvivalResult,
    TrialSummary,
    Verdict,
    bench_table,
    build_subgenerator,
    builtin_models,
    crude_mc_estimate,
    empirical_second_moment_ratio,
    erlang_cdf,
    exact_cdf,
    exp_moment_integral,
    expm_survival,
    highprecision_hypoexp_cdf,
    highprecision_hypoexp_cdf_split,
    is_estimate,
    lower_incomplete_gamma,
    matrix_exponential,
    re_bound,
    regularized_gamma_p,
    ross_cdf,
    run_trials,
    sample_weight,
    second_moment_ratio_bound,
    stirling_upper_bound,
    validate_problem,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "FLOOR_THRESHOLD",
    "EstimateResult",
    "ExactResult",
    "ExactRoute",
    "HypoexpError",
    "ModelSpec",
    "Problem",
    "RossResult",
    "StabilityReport",
    "SurvivalResult",
    "TrialSummary",
    "Verdict",
    "bench_table",
    "build_subgenerator",
    "builtin_models",
    "crude_mc_estimate",
    "empirical_second_moment_ratio",
    "erlang_cdf",
    "exact_cdf",
    "exp_moment_integral",
    "expm_survival",
    "highprecision_hypoexp_cdf",
    "highprecision_hypoexp_cdf_split",
    "is_estimate",
    "lower_incomplete_gamma",
    "matrix_exponential",
    "re_bound",
    "regularized_gamma_p",
    "ross_cdf",
    "run_trials",
    "sample_weight",
    "second_moment_ratio_bound",
    "stirling_upper_bound",
    "validate_problem",
]
