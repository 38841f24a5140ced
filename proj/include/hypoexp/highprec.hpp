#pragma once

#include "hypoexp/problem.hpp"

namespace hypoexp {

/// Evaluates the distinct-rate closed form
///   1 - sum_i e^{-rate_i t} prod_{j != i} rate_j / (rate_j - rate_i)
/// in software floating point with `digits` decimal digits, so the massive
/// term cancellation that wrecks the double evaluation stays resolved.
/// `digits` is a floor: when the measured cancellation would leave fewer
/// than ~30 significant digits the working precision is raised and the sum
/// re-evaluated. Test/oracle use only; not a fast path.
///
/// Requires pairwise distinct rates (Error(errc::duplicate_rates)) and
/// digits >= 30 (std::invalid_argument).
double highprecision_hypoexp_cdf(const Problem& problem, int digits = 60);

/// Same oracle, tolerant of repeated rates: duplicates are staggered by a
/// symmetric +/-1e-7 relative offset and the two evaluations averaged, which
/// cancels the first-order perturbation bias (residual ~1e-13 relative).
double highprecision_hypoexp_cdf_split(const Problem& problem, int digits = 60);

}  // namespace hypoexp
