#pragma once

#include <cstdint>
#include <span>

#include "hypoexp/problem.hpp"

namespace hypoexp {

struct ISConfig {
    std::uint64_t sample_size = 1000;  // N >= 1
    std::uint64_t seed = 1;
    // The threshold is always rescaled to 1 internally (rates become t*rate_i).
};

struct EstimateResult {
    double estimate = 0.0;      // >= 0 by construction; may underflow to 0
                                // when log_estimate < log(DBL_MIN)
    double log_estimate = 0.0;  // natural log; -inf when nothing was accepted
    std::uint64_t samples = 0;
    std::uint64_t accepted = 0;  // draws with sum y_i <= 1
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
};

/// Likelihood ratio of one proposal draw against the target, in the
/// unit-threshold parameterization: 0 when sum y_i > 1, else
/// exp(sum_i [ln rate_i - rate_i y_i] - n ln n + n sum_i y_i).
double sample_weight(const RateVector& unit_rates, std::span<const double> draws);

/// The importance-sampling estimator: N i.i.d. proposal vectors with
/// y_i ~ exp(n), accepted weights accumulated by streaming log-sum-exp,
/// result = (accepted weight sum)/N. Deterministic for fixed (problem, N,
/// seed); the special case rate_i = n for all i reduces exactly to
/// accepted/N.
EstimateResult is_estimate(const Problem& problem, const ISConfig& config);

/// Theoretical bound on E(Z^2)/E(Z)^2: sqrt(n) e^{2(max_rate - min_rate) + 1}.
double second_moment_ratio_bound(const RateVector& rates);

/// Relative-error bound sqrt(second_moment_ratio_bound / N); decays as
/// 1/sqrt(N) independent of how rare the event is.
double re_bound(const RateVector& rates, std::uint64_t sample_size);

/// Empirical (sum Z_i^2 / N) / (sum Z_i / N)^2 in log space; the measured
/// counterpart of second_moment_ratio_bound. Throws
/// Error(errc::all_samples_rejected) when every weight is zero (N is far too
/// small for the regime).
double empirical_second_moment_ratio(const Problem& problem, const ISConfig& config);

}  // namespace hypoexp
