#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hypoexp/importance.hpp"
#include "hypoexp/problem.hpp"

namespace hypoexp {

enum class EstimatorKind { importance_sampling, crude_monte_carlo };

/// K-run aggregate of one estimator on one problem.
struct TrialSummary {
    std::string algorithm;
    std::vector<double> per_run_estimates;
    double mean = 0.0;        // (1/K) sum of per-run estimates
    double sample_std = 0.0;  // sqrt((1/(K-1)) sum (est - mean)^2)
    double re_hat = 0.0;      // sample_std / mean; meaningless unless re_defined
    bool re_defined = false;  // false when mean == 0 (all runs returned 0)
    double rtv = 0.0;         // total_cpu_seconds * re_hat^2
    double total_cpu_seconds = 0.0;  // sum of per-run sampling-loop times
    std::uint64_t sample_size = 0;
    int runs = 0;
    std::uint64_t master_seed = 0;
};

using Estimator =
    std::function<EstimateResult(const Problem&, std::uint64_t n_samples, std::uint64_t seed)>;

/// K independent estimator runs on streams derived from (master_seed, trial
/// index); runs may execute concurrently, aggregation is ordered by index so
/// the summary is scheduling-independent. Requires runs >= 2.
TrialSummary run_trials(const Problem& problem, const Estimator& estimator,
                        std::string_view name, std::uint64_t n_samples, int runs,
                        std::uint64_t master_seed);

TrialSummary run_trials(const Problem& problem, EstimatorKind kind, std::uint64_t n_samples,
                        int runs, std::uint64_t master_seed);

/// Direct sampling baseline: draw X_i ~ exp(rate_i), count sum X_i <= t.
/// Useless in rare regimes (returns 0), which is exactly what it is here to
/// demonstrate.
EstimateResult crude_mc_estimate(const Problem& problem, std::uint64_t n_samples,
                                 std::uint64_t seed);

enum class OracleProvenance { poisson_tail, extended_precision_ross };

const char* to_string(OracleProvenance p) noexcept;

struct ModelSpec {
    std::string name;
    RateVector rates;
    double threshold;
    double oracle_value;  // computed once at construction, then cached
    OracleProvenance oracle_provenance;

    Problem problem() const { return Problem(rates, threshold); }
};

/// The three built-in benchmark models: 10 i.i.d. rates 0.03, 10 i.i.d.
/// rates 0.01, and the heterogeneous 0.01/0.011/0.009 pattern, all with
/// t = 1. Oracle values attach at first use and are cached for the process
/// lifetime.
const std::vector<ModelSpec>& builtin_models();

}  // namespace hypoexp
