#include "hypoexp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "hypoexp/highprec.hpp"
#include "hypoexp/rng.hpp"
#include "hypoexp/special.hpp"

namespace hypoexp {

TrialSummary run_trials(const Problem& problem, const Estimator& estimator,
                        std::string_view name, std::uint64_t n_samples, int runs,
                        std::uint64_t master_seed) {
    if (runs < 2) {
        throw Error(errc::malformed_input, "need at least 2 runs for a spread estimate");
    }
    if (n_samples < 1) {
        throw Error(errc::malformed_input, "sample size must be >= 1");
    }

    std::vector<EstimateResult> results(static_cast<std::size_t>(runs));
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                                   static_cast<unsigned>(runs)));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int k; (k = next.fetch_add(1)) < runs;) {
                results[static_cast<std::size_t>(k)] =
                    estimator(problem, n_samples, trial_seed(master_seed, static_cast<std::uint64_t>(k)));
            }
        });
    }
    for (auto& thread : pool) thread.join();

    TrialSummary summary;
    summary.algorithm = std::string(name);
    summary.sample_size = n_samples;
    summary.runs = runs;
    summary.master_seed = master_seed;
    summary.per_run_estimates.reserve(results.size());
    for (const auto& r : results) {
        summary.per_run_estimates.push_back(r.estimate);
        summary.total_cpu_seconds += r.elapsed_seconds;
    }

    double sum = 0.0;
    for (const double e : summary.per_run_estimates) sum += e;
    summary.mean = sum / runs;

    double sq = 0.0;
    for (const double e : summary.per_run_estimates) {
        const double d = e - summary.mean;
        sq += d * d;
    }
    summary.sample_std = std::sqrt(sq / (runs - 1));

    if (summary.mean > 0.0) {
        summary.re_defined = true;
        summary.re_hat = summary.sample_std / summary.mean;
        summary.rtv = summary.total_cpu_seconds * summary.re_hat * summary.re_hat;
    }
    return summary;
}

TrialSummary run_trials(const Problem& problem, EstimatorKind kind, std::uint64_t n_samples,
                        int runs, std::uint64_t master_seed) {
    switch (kind) {
        case EstimatorKind::importance_sampling:
            return run_trials(
                problem,
                [](const Problem& p, std::uint64_t n, std::uint64_t seed) {
                    return is_estimate(p, ISConfig{n, seed});
                },
                "is", n_samples, runs, master_seed);
        case EstimatorKind::crude_monte_carlo:
            return run_trials(
                problem,
                [](const Problem& p, std::uint64_t n, std::uint64_t seed) {
                    return crude_mc_estimate(p, n, seed);
                },
                "crude-mc", n_samples, runs, master_seed);
    }
    throw Error(errc::malformed_input, "unknown estimator kind");
}

EstimateResult crude_mc_estimate(const Problem& problem, std::uint64_t n_samples,
                                 std::uint64_t seed) {
    if (n_samples < 1) {
        throw Error(errc::malformed_input, "sample size must be >= 1");
    }
    const RateVector& rates = problem.rates();
    const double threshold = problem.threshold();
    const std::size_t n = rates.size();

    Xoshiro256pp rng(seed);
    std::uint64_t hits = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            total += rng.exponential(rates[i]);
        }
        if (total <= threshold) ++hits;
    }
    const auto stop = std::chrono::steady_clock::now();

    EstimateResult result;
    result.samples = n_samples;
    result.accepted = hits;
    result.seed = seed;
    result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    result.estimate = static_cast<double>(hits) / static_cast<double>(n_samples);
    result.log_estimate = hits == 0 ? -std::numeric_limits<double>::infinity()
                                    : std::log(result.estimate);
    return result;
}

const char* to_string(OracleProvenance p) noexcept {
    return p == OracleProvenance::poisson_tail ? "poisson-tail" : "extended-precision-ross";
}

const std::vector<ModelSpec>& builtin_models() {
    static const std::vector<ModelSpec> models = [] {
        std::vector<ModelSpec> out;
        out.push_back({"model1", RateVector(std::vector<double>(10, 0.03)), 1.0,
                       erlang_cdf(10, 0.03, 1.0), OracleProvenance::poisson_tail});
        out.push_back({"model2", RateVector(std::vector<double>(10, 0.01)), 1.0,
                       erlang_cdf(10, 0.01, 1.0), OracleProvenance::poisson_tail});
        const std::vector<double> pattern{0.01, 0.011, 0.009, 0.01,  0.011,
                                          0.009, 0.01, 0.011, 0.009, 0.01};
        const Problem model3(RateVector(pattern), 1.0);
        out.push_back({"model3", model3.rates(), 1.0,
                       highprecision_hypoexp_cdf_split(model3, 60),
                       OracleProvenance::extended_precision_ross});
        return out;
    }();
    return models;
}

}  // namespace hypoexp
