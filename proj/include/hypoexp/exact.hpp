#pragma once

#include <Eigen/Core>

#include <optional>

#include "hypoexp/problem.hpp"

namespace hypoexp {

/// Below this value an exact double-precision result is rounding noise
/// (1000x machine epsilon); callers should switch to the sampler.
inline constexpr double kFloorThreshold = 1e-12;

enum class Verdict { stable, suspect, catastrophic };
enum class ExactRoute { ross, expm };

const char* to_string(Verdict v) noexcept;
const char* to_string(ExactRoute r) noexcept;

/// Diagnostics for one closed-form evaluation.
struct StabilityReport {
    /// Smallest |rate_i - rate_j| over i != j; +inf for a single rate.
    double min_rate_gap = 0.0;
    /// Largest |e^{-rate_i t} prod_{j!=i} rate_j/(rate_j - rate_i)|, measured
    /// in log form so it never overflows the measurement itself.
    double max_term_magnitude = 0.0;
    /// log10 of (largest intermediate / |result|), clamped at 0; the leading
    /// 1 of "1 - sum" counts as an intermediate. +inf when the result is 0.
    double cancellation_digits = 0.0;
    Verdict verdict = Verdict::stable;
};

struct RossResult {
    double value = 0.0;  // raw double evaluation, NOT clamped to [0,1]
    StabilityReport report;
};

/// Closed-form CDF 1 - sum_i e^{-rate_i t} prod_{j!=i} rate_j/(rate_j-rate_i)
/// in plain double arithmetic, O(n^2). The raw value is returned even when it
/// is garbage; the report says so. Throws Error(errc::duplicate_rates) when
/// two rates compare exactly equal.
RossResult ross_cdf(const Problem& problem);

/// Upper-bidiagonal subgenerator: D(i,i) = -rate_i, D(i,i+1) = rate_i.
/// The n = 1 survival e^{D t} = e^{-rate t} pins the bottom-right sign.
Eigen::MatrixXd build_subgenerator(const RateVector& rates);

struct SurvivalResult {
    double raw = 0.0;      // first-row sum of e^{Dt}, as computed
    double clamped = 0.0;  // raw clamped to [0,1]
};

/// P(sum X_i >= t) as the first-row sum of e^{Dt}.
SurvivalResult expm_survival(const Problem& problem);

struct ExactResult {
    double value = 0.0;
    ExactRoute route = ExactRoute::ross;
    bool floor_regime = false;  // value < kFloorThreshold: use the sampler
    std::optional<StabilityReport> ross_report;  // set when the closed form ran
};

/// Dispatcher: closed form when the rates are distinct and it is stable,
/// matrix-exponential survival otherwise. Always returns a value plus
/// diagnostics; never throws on valid problems.
ExactResult exact_cdf(const Problem& problem);

}  // namespace hypoexp
