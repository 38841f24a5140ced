#include "hypoexp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hypoexp {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_positive_rate: return "NonPositiveRate";
        case errc::non_finite_input: return "NonFiniteInput";
        case errc::empty_rates: return "EmptyRates";
        case errc::non_positive_threshold: return "NonPositiveThreshold";
        case errc::invalid_order: return "InvalidOrder";
        case errc::duplicate_rates: return "DuplicateRates";
        case errc::non_square: return "NonSquare";
        case errc::non_finite: return "NonFinite";
        case errc::all_samples_rejected: return "AllSamplesRejected";
        case errc::malformed_input: return "MalformedInput";
        case errc::io_failure: return "IOFailure";
    }
    return "UnknownError";
}

RateVector::RateVector(std::vector<double> rates) : rates_(std::move(rates)) {
    if (rates_.empty()) {
        throw Error(errc::empty_rates, "rate vector must contain at least one rate");
    }
    for (std::size_t i = 0; i < rates_.size(); ++i) {
        const double r = rates_[i];
        if (!std::isfinite(r)) {
            throw Error(errc::non_finite_input,
                        "rate " + std::to_string(i + 1) + " is not finite");
        }
        if (r <= 0.0) {
            throw Error(errc::non_positive_rate,
                        "rate " + std::to_string(i + 1) + " = " + std::to_string(r) +
                            " is not strictly positive");
        }
    }
    min_rate_ = *std::min_element(rates_.begin(), rates_.end());
    max_rate_ = *std::max_element(rates_.begin(), rates_.end());

    min_gap_ = std::numeric_limits<double>::infinity();
    std::vector<double> sorted = rates_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        min_gap_ = std::min(min_gap_, sorted[i] - sorted[i - 1]);
    }
}

Problem::Problem(RateVector rates, double threshold)
    : rates_(std::move(rates)), threshold_(threshold) {
    if (!std::isfinite(threshold_)) {
        throw Error(errc::non_finite_input, "threshold is not finite");
    }
    if (threshold_ <= 0.0) {
        throw Error(errc::non_positive_threshold,
                    "threshold = " + std::to_string(threshold_) + " is not strictly positive");
    }
}

Problem Problem::rescaled_to_unit() const {
    std::vector<double> scaled(rates_.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = rates_[i] * threshold_;
    }
    return Problem(RateVector(std::move(scaled)), 1.0);
}

Problem validate_problem(const std::vector<double>& rates, double threshold) {
    return Problem(RateVector(rates), threshold);
}

}  // namespace hypoexp
