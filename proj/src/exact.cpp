#include "hypoexp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypoexp/matexp.hpp"

namespace hypoexp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kVerdictSlack = 1e-9;
constexpr double kSuspectDigits = 8.0;  // half of double's ~16 digits gone
constexpr double kLn10 = 2.302585092994046;
}  // namespace

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::suspect: return "suspect";
        case Verdict::catastrophic: return "catastrophic";
    }
    return "?";
}

const char* to_string(ExactRoute r) noexcept {
    return r == ExactRoute::ross ? "ross" : "expm";
}

RossResult ross_cdf(const Problem& problem) {
    if (!problem.rates().pairwise_distinct()) {
        throw Error(errc::duplicate_rates, "closed form requires pairwise distinct rates");
    }
    // Evaluate in the unit-threshold parameterization: (rates, t) and
    // (t*rates, 1) then run through bit-identical arithmetic, which is the
    // rescaling-invariance contract.
    const Problem unit = problem.rescaled_to_unit();
    const RateVector& rates = unit.rates();
    const std::size_t n = rates.size();

    double sum = 0.0;
    double max_log_term = -kInf;
    for (std::size_t i = 0; i < n; ++i) {
        // Plain double product: the instability is the observable, so the
        // value is computed exactly the naive way. The log accumulator only
        // feeds the report.
        double term = std::exp(-rates[i]);
        double log_magnitude = -rates[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double factor = rates[j] / (rates[j] - rates[i]);
            term *= factor;
            log_magnitude += std::log(std::abs(factor));
        }
        sum += term;
        max_log_term = std::max(max_log_term, log_magnitude);
    }
    const double value = 1.0 - sum;

    StabilityReport report;
    report.min_rate_gap = problem.rates().min_gap();  // gap of the rates as given
    report.max_term_magnitude = std::exp(max_log_term);
    const double log10_peak = std::max(max_log_term, 0.0) / kLn10;
    report.cancellation_digits =
        value == 0.0 ? kInf : std::max(0.0, log10_peak - std::log10(std::abs(value)));

    if (!std::isfinite(value) || value < -kVerdictSlack || value > 1.0 + kVerdictSlack) {
        report.verdict = Verdict::catastrophic;
    } else if (report.cancellation_digits >= kSuspectDigits) {
        report.verdict = Verdict::suspect;
    } else {
        report.verdict = Verdict::stable;
    }
    return {value, report};
}

Eigen::MatrixXd build_subgenerator(const RateVector& rates) {
    const auto n = static_cast<Eigen::Index>(rates.size());
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        d(i, i) = -rates[static_cast<std::size_t>(i)];
        if (i + 1 < n) {
            d(i, i + 1) = rates[static_cast<std::size_t>(i)];
        }
    }
    return d;
}

SurvivalResult expm_survival(const Problem& problem) {
    // Same unit-threshold convention as ross_cdf; entrywise this equals
    // build_subgenerator(rates) * t exactly.
    const Problem unit = problem.rescaled_to_unit();
    const Eigen::MatrixXd d = build_subgenerator(unit.rates());
    const Eigen::MatrixXd e = matrix_exponential(d);
    const double raw = e.row(0).sum();
    return {raw, std::clamp(raw, 0.0, 1.0)};
}

ExactResult exact_cdf(const Problem& problem) {
    ExactResult out;
    if (problem.rates().pairwise_distinct()) {
        const RossResult ross = ross_cdf(problem);
        out.ross_report = ross.report;
        if (ross.report.verdict == Verdict::stable) {
            out.value = ross.value;
            out.route = ExactRoute::ross;
            out.floor_regime = out.value < kFloorThreshold;
            return out;
        }
    }
    out.value = 1.0 - expm_survival(problem).raw;
    out.route = ExactRoute::expm;
    out.floor_regime = out.value < kFloorThreshold;
    return out;
}

}  // namespace hypoexp
