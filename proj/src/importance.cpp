#include "hypoexp/importance.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "hypoexp/rng.hpp"

namespace hypoexp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Streaming log-sum-exp: tracks max log weight M and S = sum exp(lw - M).
// Every increment of S is <= 1, so S <= count and never overflows.
struct LogSumExp {
    double max_log = -kInf;
    double scaled_sum = 0.0;

    void add(double log_w) {
        if (log_w <= max_log) {
            scaled_sum += std::exp(log_w - max_log);
        } else {
            scaled_sum = scaled_sum * std::exp(max_log - log_w) + 1.0;
            max_log = log_w;
        }
    }

    double log_total() const { return max_log + std::log(scaled_sum); }
};

struct CoreRun {
    std::uint64_t accepted = 0;
    LogSumExp weight;          // sum of Z
    LogSumExp weight_squared;  // sum of Z^2 (log weights doubled)
    double elapsed_seconds = 0.0;
};

void check_sample_size(std::uint64_t n_samples) {
    if (n_samples < 1) {
        throw Error(errc::malformed_input, "sample size must be >= 1");
    }
}

// One full sampling pass in the unit-threshold parameterization. Draw order
// is fixed (n exponentials per replication, always all n) so a seed pins the
// whole run bit-exactly.
CoreRun run_sampler(const Problem& problem, const ISConfig& config) {
    const Problem unit = problem.rescaled_to_unit();
    const std::size_t n = unit.size();
    const double proposal_rate = static_cast<double>(n);
    const double log_proposal_rate = std::log(proposal_rate);

    // Per-component pieces of the log weight: (ln rate_i - ln n) and
    // (n - rate_i) y_i. Both vanish identically when rate_i == n, which makes
    // the proposal-equals-target case reduce to exact indicator counting.
    std::vector<double> log_ratio(n);
    std::vector<double> rate_gap(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double rate = unit.rates()[i];
        log_ratio[i] = std::log(rate) - log_proposal_rate;
        rate_gap[i] = proposal_rate - rate;
    }

    CoreRun run;
    Xoshiro256pp rng(config.seed);
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t s = 0; s < config.sample_size; ++s) {
        double draw_sum = 0.0;
        double log_w = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double y = rng.exponential(proposal_rate);
            draw_sum += y;
            log_w += log_ratio[i] + rate_gap[i] * y;
        }
        if (draw_sum <= 1.0) {
            ++run.accepted;
            run.weight.add(log_w);
            run.weight_squared.add(2.0 * log_w);
        }
    }
    const auto stop = std::chrono::steady_clock::now();
    run.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    return run;
}

}  // namespace

double sample_weight(const RateVector& unit_rates, std::span<const double> draws) {
    const std::size_t n = unit_rates.size();
    if (draws.size() != n) {
        throw Error(errc::malformed_input, "need exactly one draw per rate");
    }
    double draw_sum = 0.0;
    for (const double y : draws) {
        if (!(y > 0.0) || !std::isfinite(y)) {
            throw Error(errc::malformed_input, "draws must be strictly positive");
        }
        draw_sum += y;
    }
    if (draw_sum > 1.0) return 0.0;

    const double proposal_rate = static_cast<double>(n);
    const double log_proposal_rate = std::log(proposal_rate);
    double log_w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        log_w += (std::log(unit_rates[i]) - log_proposal_rate) +
                 (proposal_rate - unit_rates[i]) * draws[i];
    }
    return std::exp(log_w);
}

EstimateResult is_estimate(const Problem& problem, const ISConfig& config) {
    check_sample_size(config.sample_size);
    const CoreRun run = run_sampler(problem, config);

    EstimateResult result;
    result.samples = config.sample_size;
    result.accepted = run.accepted;
    result.elapsed_seconds = run.elapsed_seconds;
    result.seed = config.seed;
    if (run.accepted == 0) {
        result.estimate = 0.0;
        result.log_estimate = -kInf;
        return result;
    }
    const double n_samples = static_cast<double>(config.sample_size);
    result.log_estimate = run.weight.log_total() - std::log(n_samples);
    const double scale = std::exp(run.weight.max_log);
    if (scale > 0.0 && std::isfinite(scale)) {
        // scaled_sum/N <= 1, so this cannot overflow; when max_log == 0 it
        // is exactly accepted/N with no exp/log round trip.
        result.estimate = scale * (run.weight.scaled_sum / n_samples);
    } else {
        result.estimate = std::exp(result.log_estimate);
    }
    return result;
}

double second_moment_ratio_bound(const RateVector& rates) {
    const double n = static_cast<double>(rates.size());
    return std::sqrt(n) * std::exp(2.0 * (rates.max_rate() - rates.min_rate()) + 1.0);
}

double re_bound(const RateVector& rates, std::uint64_t sample_size) {
    check_sample_size(sample_size);
    return std::sqrt(second_moment_ratio_bound(rates) / static_cast<double>(sample_size));
}

double empirical_second_moment_ratio(const Problem& problem, const ISConfig& config) {
    check_sample_size(config.sample_size);
    const CoreRun run = run_sampler(problem, config);
    if (run.accepted == 0) {
        throw Error(errc::all_samples_rejected,
                    "all proposal draws missed the acceptance region; increase the sample size");
    }
    const double log_n = std::log(static_cast<double>(config.sample_size));
    return std::exp(run.weight_squared.log_total() - 2.0 * run.weight.log_total() + log_n);
}

}  // namespace hypoexp
