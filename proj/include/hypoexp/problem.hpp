#pragma once

#include <cstddef>
#include <vector>

#include "hypoexp/errors.hpp"

namespace hypoexp {

/// Ordered list of strictly positive, finite exponential rates.
/// Construction validates; an instance always satisfies the invariants.
class RateVector {
public:
    explicit RateVector(std::vector<double> rates);

    std::size_t size() const noexcept { return rates_.size(); }
    double operator[](std::size_t i) const noexcept { return rates_[i]; }
    const std::vector<double>& values() const noexcept { return rates_; }

    auto begin() const noexcept { return rates_.begin(); }
    auto end() const noexcept { return rates_.end(); }

    double max_rate() const noexcept { return max_rate_; }
    double min_rate() const noexcept { return min_rate_; }

    /// True when no two rates compare exactly equal. Near-equal rates are
    /// legal; instability on them is diagnosed, not rejected.
    bool pairwise_distinct() const noexcept { return min_gap_ > 0.0; }

    /// Smallest |rate_i - rate_j| over i != j; +inf for a single rate.
    double min_gap() const noexcept { return min_gap_; }

private:
    std::vector<double> rates_;
    double min_rate_;
    double max_rate_;
    double min_gap_;
};

/// A rate vector plus the time threshold t of P(sum X_i <= t).
class Problem {
public:
    Problem(RateVector rates, double threshold);

    const RateVector& rates() const noexcept { return rates_; }
    double threshold() const noexcept { return threshold_; }
    std::size_t size() const noexcept { return rates_.size(); }

    /// Equivalent problem with threshold 1: rates become t*rate_i.
    /// P(sum X_i <= t) is invariant under this rescaling.
    Problem rescaled_to_unit() const;

private:
    RateVector rates_;
    double threshold_;
};

/// Validates raw input into a Problem. Throws Error with one of
/// errc::{empty_rates, non_finite_input, non_positive_rate,
/// non_positive_threshold}; never crashes on any input.
Problem validate_problem(const std::vector<double>& rates, double threshold);

}  // namespace hypoexp
