// hypoexp: exact and Monte Carlo evaluation of P(sum of exponentials <= t).
//
// Exit codes: 0 success (including catastrophic diagnoses: reporting the
// failure mode is the point), 2 malformed input or parameters, 3 I/O failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hypoexp/hypoexp.hpp"

namespace {

using namespace hypoexp;

struct RatesOptions {
    std::string inline_rates;
    std::string rates_file;
    double threshold = 1.0;
    std::string dump_path;
};

void add_rates_options(CLI::App* cmd, RatesOptions& opts) {
    auto* inline_opt = cmd->add_option(
        "--rates", opts.inline_rates,
        "comma-separated rates; 'VALxN' repeats VAL N times (e.g. 0.03x10)");
    auto* file_opt = cmd->add_option("--rates-file", opts.rates_file,
                                     "rates file: one per line, '#' comments");
    inline_opt->excludes(file_opt);
    file_opt->excludes(inline_opt);
    cmd->add_option("--t", opts.threshold, "threshold t > 0")->capture_default_str();
    cmd->add_option("--dump-rates", opts.dump_path,
                    "write the parsed rates to this file (round-trip exact) and continue");
}

Problem load_problem(const RatesOptions& opts) {
    std::vector<double> rates;
    if (!opts.inline_rates.empty()) {
        rates = parse_rates_inline(opts.inline_rates);
    } else if (!opts.rates_file.empty()) {
        rates = read_rates_file(opts.rates_file);
    } else {
        throw Error(errc::malformed_input, "need --rates or --rates-file");
    }
    if (!opts.dump_path.empty()) {
        write_rates_file(opts.dump_path, rates);
    }
    return validate_problem(rates, opts.threshold);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HYPOEXP_SEED")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return value;
        std::fprintf(stderr, "warning: ignoring unparseable HYPOEXP_SEED='%s'\n", env);
    }
    return 1;
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* env = std::getenv("HYPOEXP_OUTDIR")) {
            return std::filesystem::path(env) / p;
        }
    }
    return p;
}

void print_floor_warning() {
    std::printf("warning: floor regime: |cdf| <= 1e-12 is double-precision rounding noise "
                "here; use `hypoexp estimate`\n");
}

int cmd_exact(const RatesOptions& rates_opts) {
    const Problem problem = load_problem(rates_opts);
    std::printf("n=%zu t=%g\n", problem.size(), problem.threshold());

    if (problem.rates().pairwise_distinct()) {
        const RossResult ross = ross_cdf(problem);
        std::printf("route ross: value=%.6e verdict=%s min_gap=%.6e max_term=%.6e "
                    "cancelled_digits=%.1f\n",
                    ross.value, to_string(ross.report.verdict), ross.report.min_rate_gap,
                    ross.report.max_term_magnitude, ross.report.cancellation_digits);
        if (ross.report.verdict == Verdict::catastrophic) {
            std::printf("warning: catastrophic closed-form evaluation (cancellation ate the "
                        "result); trust the expm route\n");
        } else if (ross.report.verdict == Verdict::suspect) {
            std::printf("warning: closed form lost %.1f digits to cancellation; cross-check "
                        "with the expm route\n",
                        ross.report.cancellation_digits);
        }
    } else {
        std::printf("route ross: inapplicable (duplicate rates)\n");
    }

    const SurvivalResult survival = expm_survival(problem);
    std::printf("route expm: survival=%.6e raw_cdf=%.6e clamped_cdf=%.6e\n", survival.raw,
                1.0 - survival.raw, std::clamp(1.0 - survival.raw, 0.0, 1.0));

    const ExactResult selected = exact_cdf(problem);
    std::printf("selected: route=%s cdf=%.6e\n", to_string(selected.route), selected.value);
    if (selected.floor_regime) print_floor_warning();
    return 0;
}

int cmd_estimate(const RatesOptions& rates_opts, std::uint64_t n_samples, int runs,
                 std::uint64_t seed) {
    const Problem problem = load_problem(rates_opts);
    if (n_samples == 0) n_samples = 100 * problem.size();
    const double bound = re_bound(problem.rates(), n_samples);

    std::printf("n=%zu t=%g N=%llu K=%d seed=%llu\n", problem.size(), problem.threshold(),
                static_cast<unsigned long long>(n_samples), runs,
                static_cast<unsigned long long>(seed));
    if (runs == 1) {
        const EstimateResult result = is_estimate(problem, {n_samples, seed});
        std::printf("estimate=%.6e log10=%.4f accepted=%llu\n", result.estimate,
                    result.log_estimate / std::log(10.0),
                    static_cast<unsigned long long>(result.accepted));
        std::printf("re_bound=%.2e\n", bound);
        std::printf("timing: cpu_seconds=%.6f\n", result.elapsed_seconds);
        return 0;
    }
    const TrialSummary summary = run_trials(problem, EstimatorKind::importance_sampling,
                                            n_samples, runs, seed);
    std::printf("mean=%.6e log10=%.4f\n", summary.mean,
                summary.mean > 0.0 ? std::log10(summary.mean)
                                   : -std::numeric_limits<double>::infinity());
    if (summary.re_defined) {
        std::printf("re_hat=%.2e re_bound=%.2e\n", summary.re_hat, bound);
    } else {
        std::printf("re_hat=undefined re_bound=%.2e\n", bound);
    }
    std::printf("timing: cpu_seconds=%.6f rtv=%.2e\n", summary.total_cpu_seconds, summary.rtv);
    return 0;
}

int cmd_bound(const RatesOptions& rates_opts, std::uint64_t n_samples) {
    const Problem problem = load_problem(rates_opts);
    if (n_samples == 0) n_samples = 100 * problem.size();
    const RateVector& rates = problem.rates();
    std::printf("n=%zu max_rate=%g min_rate=%g\n", rates.size(), rates.max_rate(),
                rates.min_rate());
    std::printf("second_moment_ratio_bound=%.6e\n", second_moment_ratio_bound(rates));
    std::printf("re_bound(N=%llu)=%.6e\n", static_cast<unsigned long long>(n_samples),
                re_bound(rates, n_samples));
    return 0;
}

int cmd_oracle(const RatesOptions& rates_opts, int model_index, int digits) {
    if (model_index != 0) {
        const auto& models = builtin_models();
        if (model_index < 1 || model_index > static_cast<int>(models.size())) {
            throw Error(errc::malformed_input, "--model must be 1, 2 or 3");
        }
        const ModelSpec& model = models[static_cast<std::size_t>(model_index - 1)];
        std::printf("model=%s oracle=%.6e provenance=%s\n", model.name.c_str(),
                    model.oracle_value, to_string(model.oracle_provenance));
        return 0;
    }
    const Problem problem = load_problem(rates_opts);
    const RateVector& rates = problem.rates();
    const bool all_equal = rates.max_rate() == rates.min_rate();
    double value = 0.0;
    OracleProvenance provenance;
    if (all_equal) {
        value = erlang_cdf(static_cast<int>(rates.size()), rates[0], problem.threshold());
        provenance = OracleProvenance::poisson_tail;
    } else {
        value = highprecision_hypoexp_cdf_split(problem, digits);
        provenance = OracleProvenance::extended_precision_ross;
    }
    std::printf("oracle=%.6e provenance=%s digits=%d\n", value, to_string(provenance),
                all_equal ? 0 : digits);
    return 0;
}

int cmd_bench(std::uint64_t n_samples, int runs, std::uint64_t seed, const std::string& format,
              const std::string& output) {
    BenchConfig config;
    if (n_samples > 0) config.fixed_sample_size = n_samples;
    config.runs = runs;
    config.master_seed = seed;
    const std::vector<TableRow> rows = build_model_table(config);
    const std::string rendered = format == "json" ? render_json(rows) : render_csv(rows);
    if (output.empty() || output == "-") {
        std::fputs(rendered.c_str(), stdout);
    } else {
        write_text_file(resolve_output(output), rendered);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypoexponential CDF toolkit: exact routes with stability diagnostics, a "
                 "bounded-relative-error importance-sampling estimator, and the benchmark "
                 "tables (defaults: t=1, N=100n, K=10, seed=1 or HYPOEXP_SEED)"};
    app.require_subcommand(1);

    RatesOptions exact_rates;
    auto* exact = app.add_subcommand("exact", "exact CDF by both routes plus diagnostics");
    add_rates_options(exact, exact_rates);

    RatesOptions estimate_rates;
    std::uint64_t estimate_n = 0;
    int estimate_k = 10;
    std::uint64_t estimate_seed = default_seed();
    auto* estimate =
        app.add_subcommand("estimate", "importance-sampling estimate with RE statistics");
    add_rates_options(estimate, estimate_rates);
    estimate->add_option("--N", estimate_n, "samples per run (default 100n)");
    estimate->add_option("--K", estimate_k, "independent runs (K>=2 for RE)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    estimate->add_option("--seed", estimate_seed, "master seed")->capture_default_str();

    RatesOptions bound_rates;
    std::uint64_t bound_n = 0;
    auto* bound = app.add_subcommand("bound", "variance-theorem bounds for the estimator");
    add_rates_options(bound, bound_rates);
    bound->add_option("--N", bound_n, "sample size for the RE bound (default 100n)");

    RatesOptions oracle_rates;
    int oracle_model = 0;
    int oracle_digits = 60;
    auto* oracle = app.add_subcommand("oracle", "high-precision reference value");
    add_rates_options(oracle, oracle_rates);
    oracle->add_option("--model", oracle_model, "built-in model number (1-3)")
        ->check(CLI::Range(1, 3));
    oracle->add_option("--digits", oracle_digits, "decimal digits (>=30)")
        ->capture_default_str();

    std::uint64_t bench_n = 0;
    int bench_k = 10;
    std::uint64_t bench_seed = default_seed();
    std::string bench_format = "csv";
    std::string bench_output;
    auto* bench = app.add_subcommand("bench", "benchmark table over the built-in models");
    bench->add_option("--N", bench_n, "fixed samples per run (default: policy 100n)");
    bench->add_option("--K", bench_k, "runs per estimator")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "master seed")->capture_default_str();
    bench->add_option("--format", bench_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    bench->add_option("--output", bench_output,
                      "output path (default stdout; HYPOEXP_OUTDIR prefixes relative paths)");

    try {
        app.parse(argc, argv);
        if (exact->parsed()) return cmd_exact(exact_rates);
        if (estimate->parsed())
            return cmd_estimate(estimate_rates, estimate_n, estimate_k, estimate_seed);
        if (bound->parsed()) return cmd_bound(bound_rates, bound_n);
        if (oracle->parsed()) return cmd_oracle(oracle_rates, oracle_model, oracle_digits);
        if (bench->parsed())
            return cmd_bench(bench_n, bench_k, bench_seed, bench_format, bench_output);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", errc_name(e.code()), e.what());
        return e.code() == errc::io_failure ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
