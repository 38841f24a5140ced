// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Estimator checks run on fixed seeds, so every line is
// reproducible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hypoexp/hypoexp.hpp"
#include "oracle_utils.hpp"
#include "problem_gen.hpp"

using namespace hypoexp;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& label) {
        if (!condition) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + label;
        }
    }

    void note(const std::string& text) {
        detail += (detail.empty() ? "" : "; ") + text;
    }
};

std::string fmt(const char* spec, double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), spec, v);
    return buffer;
}

constexpr double kPaperModel1Estimate = 1.61e-22;
constexpr double kPaperModel1Re = 5.98e-2;
constexpr double kPaperModel2Estimate = 2.75e-27;
constexpr double kPaperModel2Re = 6.05e-2;
constexpr double kPaperModel3Estimate = 2.56e-27;
constexpr double kPaperModel3Re = 3.19e-2;

void model_reproduction(Check& check, const ModelSpec& model, double paper_estimate,
                        double paper_re) {
    const TrialSummary summary =
        run_trials(model.problem(), EstimatorKind::importance_sampling, 1000, 10, 1);
    check.require(summary.re_defined, "RE undefined");
    const double oracle = model.oracle_value;
    check.require(std::abs(summary.mean - oracle) <= 3.0 * summary.re_hat * oracle,
                  "mean " + fmt("%.3e", summary.mean) + " outside 3*re_hat of oracle " +
                      fmt("%.3e", oracle));
    // the published estimate is itself a 10-run IS average; consistency means
    // it sits within its own 3*RE of the truth
    check.require(std::abs(paper_estimate - oracle) <= 3.0 * paper_re * oracle,
                  "published value inconsistent with oracle");
    check.note("mean=" + fmt("%.3e", summary.mean) + " re_hat=" + fmt("%.2e", summary.re_hat) +
               " oracle=" + fmt("%.3e", oracle));
}

Check criterion1() {
    Check check;
    const ModelSpec& model = builtin_models()[0];
    model_reproduction(check, model, kPaperModel1Estimate, kPaperModel1Re);
    const TrialSummary summary =
        run_trials(model.problem(), EstimatorKind::importance_sampling, 1000, 10, 1);
    check.require(summary.mean >= 1.2e-22 && summary.mean <= 2.0e-22,
                  "mean outside the published band [1.2e-22, 2.0e-22]");
    check.require(summary.re_hat >= 0.01 && summary.re_hat <= 0.15,
                  "re_hat outside the published band");
    return check;
}

Check criterion2() {
    Check check;
    model_reproduction(check, builtin_models()[1], kPaperModel2Estimate, kPaperModel2Re);
    return check;
}

Check criterion3() {
    Check check;
    const ModelSpec& model = builtin_models()[2];
    // oracle pinned first: the 60-digit split evaluation must reproduce the
    // frozen reference before the sampler is compared against it
    check.require(testutil::rel_err(model.oracle_value, 2.6496870228879154e-27) < 1e-9,
                  "pinned oracle moved: " + fmt("%.16e", model.oracle_value));
    model_reproduction(check, model, kPaperModel3Estimate, kPaperModel3Re);
    return check;
}

Check criterion4() {
    Check check;
    std::vector<double> rates;
    for (int k = 0; k < 12; ++k) rates.push_back((1000.0 - k) / 100.0);
    const RossResult result = ross_cdf(validate_problem(rates, 1.0));
    check.require(result.report.verdict == Verdict::catastrophic, "verdict not catastrophic");
    check.require(!std::isfinite(result.value) || result.value < 0.0 || result.value > 1.0,
                  "value not outside [0,1]");
    check.require(std::abs(result.value) > 1.0, "|value| <= 1");
    check.note("value=" + fmt("%.6e", result.value) +
               " cancelled_digits=" + fmt("%.1f", result.report.cancellation_digits));
    return check;
}

Check criterion5() {
    Check check;
    const SurvivalResult model1 = expm_survival(builtin_models()[0].problem());
    check.require(std::abs(1.0 - model1.raw) <= 1e-15,
                  "model1 |1-survival| = " + fmt("%.3e", std::abs(1.0 - model1.raw)));
    const SurvivalResult model3 = expm_survival(builtin_models()[2].problem());
    const double raw_cdf = 1.0 - model3.raw;
    check.require(std::abs(raw_cdf) <= 1e-14,
                  "model3 |raw cdf| = " + fmt("%.3e", std::abs(raw_cdf)));
    check.note("model1 1-survival=" + fmt("%.3e", 1.0 - model1.raw) +
               " model3 raw cdf=" + fmt("%.3e", raw_cdf));
    return check;
}

Check criterion6() {
    Check check;
    const double expected_bound[3] = {0.092714410423502632, 0.092714410423502632,
                                      0.092900024796851532};
    for (int m = 0; m < 3; ++m) {
        const ModelSpec& model = builtin_models()[m];
        const double bound = re_bound(model.rates, 1000);
        check.require(testutil::rel_err(bound, expected_bound[m]) < 1e-12,
                      model.name + " bound moved");
        int within = 0;
        for (int rep = 0; rep < 10; ++rep) {
            const TrialSummary summary =
                run_trials(model.problem(), EstimatorKind::importance_sampling, 1000, 10,
                           1000 + static_cast<std::uint64_t>(rep));
            if (summary.re_defined && summary.re_hat <= 2.0 * bound) ++within;
        }
        check.require(within >= 9, model.name + " only " + std::to_string(within) +
                                       "/10 reps within 2x bound");
        check.note(model.name + " bound=" + fmt("%.4f", bound) + " within=" +
                   std::to_string(within) + "/10");
    }
    return check;
}

Check criterion7() {
    Check check;
    for (int m = 0; m < 3; ++m) {
        const ModelSpec& model = builtin_models()[m];
        const double bound = second_moment_ratio_bound(model.rates);
        std::vector<double> ratios;
        for (int rep = 0; rep < 10; ++rep) {
            ratios.push_back(empirical_second_moment_ratio(
                model.problem(), {100000, 500 + static_cast<std::uint64_t>(rep)}));
        }
        std::sort(ratios.begin(), ratios.end());
        const double median = 0.5 * (ratios[4] + ratios[5]);
        check.require(median <= bound * 1.05,
                      model.name + " median ratio " + fmt("%.3f", median) + " > 1.05*bound");
        check.note(model.name + " median=" + fmt("%.3f", median) + " bound=" +
                   fmt("%.3f", bound));
    }
    return check;
}

Check criterion8() {
    Check check;
    Xoshiro256pp rng(42);
    double worst_route_gap = 0.0;
    double worst_oracle_gap = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto generated = testutil::random_separated_problem(rng, 2, 12);
        const Problem problem = generated.problem();
        const double ross = ross_cdf(problem).value;
        const double expm = 1.0 - expm_survival(problem).raw;
        worst_route_gap = std::max(worst_route_gap, std::abs(ross - expm));
        worst_oracle_gap = std::max(worst_oracle_gap, std::abs(ross - generated.reference_cdf));
    }
    check.require(worst_route_gap <= 1e-9,
                  "route disagreement " + fmt("%.2e", worst_route_gap));
    check.require(worst_oracle_gap <= 1e-9,
                  "oracle disagreement " + fmt("%.2e", worst_oracle_gap));
    check.note("max |ross-expm|=" + fmt("%.2e", worst_route_gap) + " max |ross-oracle|=" +
               fmt("%.2e", worst_oracle_gap));
    return check;
}

Check criterion9() {
    Check check;
    // The x^n e^n/n form of the I bound holds on x <= n, which covers every
    // x = n - 2*min_rate the variance theorem plugs in; on the wider grid the
    // valid (sharp) form is x^n e^x/n. The gamma bound holds everywhere.
    bool inequalities_hold = true;
    for (int n = 1; n <= 30 && inequalities_hold; ++n) {
        for (int step = 1; step <= 40; ++step) {
            const double x = (2.0 * n) * step / 40.0;
            const double sharp_i_bound = std::exp(n * std::log(x) + x) / n;
            const double g_bound = std::exp(n * std::log(x) - x) / n;
            const double x_low = static_cast<double>(n) * step / 40.0;
            const double i_bound = std::exp(n * std::log(x_low) + n) / n;
            if (!(exp_moment_integral(n, x) <= sharp_i_bound * (1.0 + 1e-12)) ||
                !(exp_moment_integral(n, x_low) <= i_bound * (1.0 + 1e-12)) ||
                !(lower_incomplete_gamma(n, x) >= g_bound * (1.0 - 1e-12))) {
                inequalities_hold = false;
                check.require(false, "I/gamma bound violated at n=" + std::to_string(n) +
                                         " x=" + fmt("%.3f", x));
                break;
            }
        }
    }
    double factorial = 1.0;
    for (int n = 1; n <= 170; ++n) {
        factorial *= n;
        if (!(factorial <= stirling_upper_bound(n))) {
            check.require(false, "stirling bound violated at n=" + std::to_string(n));
            break;
        }
    }
    return check;
}

Check criterion10() {
    Check check;
    struct Battery {
        std::vector<double> rates;
        double t;
        double truth;  // frozen from independent high-precision evaluation
    };
    const std::vector<Battery> battery{
        {std::vector<double>(2, 1.0), 1.0, 0.26424111765711536},
        {std::vector<double>(5, 5.0), 1.0, 0.5595067149347876},
        {std::vector<double>(3, 4.0), 1.0, 0.76189669444645566},
        {std::vector<double>(4, 2.0), 2.0, 0.56652987963329107},
        {{1.0, 2.0}, 1.0, 0.39957640089372805},
        {{0.5, 1.5, 2.5}, 1.0, 0.11088583874038757},
        {{3.0, 4.0, 5.0, 6.0}, 1.0, 0.61068381243534602},
    };
    for (const auto& item : battery) {
        const Problem problem = validate_problem(item.rates, item.t);
        std::vector<double> estimates;
        estimates.reserve(200);
        for (int k = 0; k < 200; ++k) {
            estimates.push_back(
                is_estimate(problem, {1000, trial_seed(777, static_cast<std::uint64_t>(k))})
                    .estimate);
        }
        const auto stats = testutil::mean_std(estimates);
        const double standard_error = stats.sample_std / std::sqrt(200.0);
        const double gap = std::abs(stats.mean - item.truth);
        check.require(gap <= 4.0 * standard_error,
                      "bias " + fmt("%.2e", gap) + " > 4 SE on truth " + fmt("%.4f", item.truth));
    }
    return check;
}

Check criterion11() {
    Check check;
    const BenchConfig config{.fixed_sample_size = std::nullopt, .runs = 10, .master_seed = 1};
    auto estimates = [](const std::string& csv) {
        std::istringstream stream(csv);
        std::string line, out;
        while (std::getline(stream, line)) {
            std::size_t start = 0;
            for (int field = 0; field < 6; ++field) start = line.find(',', start) + 1;
            out += line.substr(start, line.find(',', start) - start);
            out += '\n';
        }
        return out;
    };
    const std::string first = estimates(render_csv(build_model_table(config)));
    const std::string second = estimates(render_csv(build_model_table(config)));
    check.require(first == second, "estimate columns differ between runs");
    check.require(!first.empty(), "empty table");
    return check;
}

struct Criterion {
    int id;
    std::string name;
    double time_limit_seconds;
    std::function<Check()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Model 1 reproduction (IS, N=1000, K=10)", 2.0, criterion1},
        {2, "Model 2 reproduction (IS, N=1000, K=10)", 2.0, criterion2},
        {3, "Model 3 reproduction (pinned extended-precision oracle)", 2.0, criterion3},
        {4, "Closed-form instability on the near-equal 12-rate list", 0.1, criterion4},
        {5, "Double-precision floor of the matrix-exponential route", 2.0, criterion5},
        {6, "Corollary RE bound holds with slack (>=9/10 reps)", 30.0, criterion6},
        {7, "Theorem second-moment bound, N=1e5 median of 10", 10.0, criterion7},
        {8, "Exact-route cross-validation on 200 random problems", 30.0, criterion8},
        {9, "I/gamma/Stirling inequality suite", 1.0, criterion9},
        {10, "Unbiasedness battery (200 estimates vs truth)", 20.0, criterion10},
        {11, "Benchmark estimate columns byte-identical for seed 1", 30.0, criterion11},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check check;
        try {
            check = criterion.run();
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.time_limit_seconds) {
            check.ok = false;
            check.detail += (check.detail.empty() ? "" : "; ") + std::string("over time limit ") +
                            fmt("%.1f", criterion.time_limit_seconds) + "s";
        }
        if (!check.ok) ++failures;
        std::printf("[%s] %2d. %s (%.2fs)%s%s\n", check.ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name.c_str(), elapsed, check.detail.empty() ? "" : " — ",
                    check.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
