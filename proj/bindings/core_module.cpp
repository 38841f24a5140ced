#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hypoexp/hypoexp.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace hypoexp;

namespace {

EstimatorKind parse_kind(const std::string& name) {
    if (name == "is") return EstimatorKind::importance_sampling;
    if (name == "crude-mc" || name == "crude") return EstimatorKind::crude_monte_carlo;
    throw Error(errc::malformed_input, "estimator must be 'is' or 'crude-mc'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hypoexponential CDF toolkit: exact routes, bounded-relative-error "
              "importance sampling, and the benchmark harness.";

    py::register_exception<Error>(m, "HypoexpError");

    py::class_<Problem>(m, "Problem")
        .def(py::init([](const std::vector<double>& rates, double t) {
                 return validate_problem(rates, t);
             }),
             "rates"_a, "t"_a = 1.0)
        .def_property_readonly("rates",
                               [](const Problem& p) { return p.rates().values(); })
        .def_property_readonly("t", &Problem::threshold)
        .def_property_readonly("n", &Problem::size)
        .def("rescaled_to_unit", &Problem::rescaled_to_unit)
        .def("__repr__", [](const Problem& p) {
            return "Problem(n=" + std::to_string(p.size()) +
                   ", t=" + std::to_string(p.threshold()) + ")";
        });

    m.def(
        "validate_problem",
        [](const std::vector<double>& rates, double t) { return validate_problem(rates, t); },
        "rates"_a, "t"_a = 1.0);

    // special functions
    m.def("lower_incomplete_gamma", &lower_incomplete_gamma, "n"_a, "x"_a);
    m.def("exp_moment_integral", &exp_moment_integral, "n"_a, "x"_a);
    m.def("erlang_cdf", &erlang_cdf, "n"_a, "rate"_a, "t"_a);
    m.def("regularized_gamma_p", &regularized_gamma_p, "n"_a, "x"_a);
    m.def("stirling_upper_bound", &stirling_upper_bound, "n"_a);
    m.def("highprecision_hypoexp_cdf", &highprecision_hypoexp_cdf, "problem"_a,
          "digits"_a = 60);
    m.def("highprecision_hypoexp_cdf_split", &highprecision_hypoexp_cdf_split, "problem"_a,
          "digits"_a = 60);

    // exact routes
    py::enum_<Verdict>(m, "Verdict")
        .value("stable", Verdict::stable)
        .value("suspect", Verdict::suspect)
        .value("catastrophic", Verdict::catastrophic);
    py::enum_<ExactRoute>(m, "ExactRoute")
        .value("ross", ExactRoute::ross)
        .value("expm", ExactRoute::expm);

    py::class_<StabilityReport>(m, "StabilityReport")
        .def_readonly("min_rate_gap", &StabilityReport::min_rate_gap)
        .def_readonly("max_term_magnitude", &StabilityReport::max_term_magnitude)
        .def_readonly("cancellation_digits", &StabilityReport::cancellation_digits)
        .def_readonly("verdict", &StabilityReport::verdict);
    py::class_<RossResult>(m, "RossResult")
        .def_readonly("value", &RossResult::value)
        .def_readonly("report", &RossResult::report);
    py::class_<SurvivalResult>(m, "SurvivalResult")
        .def_readonly("raw", &SurvivalResult::raw)
        .def_readonly("clamped", &SurvivalResult::clamped);
    py::class_<ExactResult>(m, "ExactResult")
        .def_readonly("value", &ExactResult::value)
        .def_readonly("route", &ExactResult::route)
        .def_readonly("floor_regime", &ExactResult::floor_regime)
        .def_readonly("ross_report", &ExactResult::ross_report);

    m.def("ross_cdf", &ross_cdf, "problem"_a);
    m.def(
        "build_subgenerator",
        [](const std::vector<double>& rates) { return build_subgenerator(RateVector(rates)); },
        "rates"_a);
    m.def("matrix_exponential", &matrix_exponential, "a"_a);
    m.def("expm_survival", &expm_survival, "problem"_a);
    m.def("exact_cdf", &exact_cdf, "problem"_a);

    // importance sampling
    py::class_<EstimateResult>(m, "EstimateResult")
        .def_readonly("estimate", &EstimateResult::estimate)
        .def_readonly("log_estimate", &EstimateResult::log_estimate)
        .def_readonly("samples", &EstimateResult::samples)
        .def_readonly("accepted", &EstimateResult::accepted)
        .def_readonly("elapsed_seconds", &EstimateResult::elapsed_seconds)
        .def_readonly("seed", &EstimateResult::seed);

    m.def(
        "is_estimate",
        [](const Problem& problem, std::uint64_t n_samples, std::uint64_t seed) {
            return is_estimate(problem, ISConfig{n_samples, seed});
        },
        "problem"_a, "n_samples"_a = 1000, "seed"_a = 1);
    m.def(
        "sample_weight",
        [](const std::vector<double>& unit_rates, const std::vector<double>& draws) {
            return sample_weight(RateVector(unit_rates), draws);
        },
        "unit_rates"_a, "draws"_a);
    m.def(
        "second_moment_ratio_bound",
        [](const std::vector<double>& rates) {
            return second_moment_ratio_bound(RateVector(rates));
        },
        "rates"_a);
    m.def(
        "re_bound",
        [](const std::vector<double>& rates, std::uint64_t n) {
            return re_bound(RateVector(rates), n);
        },
        "rates"_a, "n_samples"_a);
    m.def(
        "empirical_second_moment_ratio",
        [](const Problem& problem, std::uint64_t n_samples, std::uint64_t seed) {
            return empirical_second_moment_ratio(problem, ISConfig{n_samples, seed});
        },
        "problem"_a, "n_samples"_a = 100000, "seed"_a = 1);

    // benchmark harness
    py::class_<TrialSummary>(m, "TrialSummary")
        .def_readonly("algorithm", &TrialSummary::algorithm)
        .def_readonly("per_run_estimates", &TrialSummary::per_run_estimates)
        .def_readonly("mean", &TrialSummary::mean)
        .def_readonly("sample_std", &TrialSummary::sample_std)
        .def_readonly("re_hat", &TrialSummary::re_hat)
        .def_readonly("re_defined", &TrialSummary::re_defined)
        .def_readonly("rtv", &TrialSummary::rtv)
        .def_readonly("total_cpu_seconds", &TrialSummary::total_cpu_seconds)
        .def_readonly("sample_size", &TrialSummary::sample_size)
        .def_readonly("runs", &TrialSummary::runs)
        .def_readonly("master_seed", &TrialSummary::master_seed);

    py::class_<ModelSpec>(m, "ModelSpec")
        .def_readonly("name", &ModelSpec::name)
        .def_property_readonly("rates",
                               [](const ModelSpec& m_) { return m_.rates.values(); })
        .def_readonly("threshold", &ModelSpec::threshold)
        .def_readonly("oracle_value", &ModelSpec::oracle_value)
        .def_property_readonly("oracle_provenance", [](const ModelSpec& m_) {
            return std::string(to_string(m_.oracle_provenance));
        });

    m.def(
        "run_trials",
        [](const Problem& problem, const std::string& estimator, std::uint64_t n_samples,
           int runs, std::uint64_t master_seed) {
            return run_trials(problem, parse_kind(estimator), n_samples, runs, master_seed);
        },
        "problem"_a, "estimator"_a = "is", "n_samples"_a = 1000, "runs"_a = 10,
        "master_seed"_a = 1);
    m.def(
        "crude_mc_estimate",
        [](const Problem& problem, std::uint64_t n_samples, std::uint64_t seed) {
            return crude_mc_estimate(problem, n_samples, seed);
        },
        "problem"_a, "n_samples"_a = 1000, "seed"_a = 1);
    m.def("builtin_models", [] { return builtin_models(); });

    m.def(
        "bench_table",
        [](std::optional<std::uint64_t> fixed_n, int runs, std::uint64_t master_seed,
           const std::string& format) {
            BenchConfig config;
            config.fixed_sample_size = fixed_n;
            config.runs = runs;
            config.master_seed = master_seed;
            const auto rows = build_model_table(config);
            return format == "json" ? render_json(rows) : render_csv(rows);
        },
        "fixed_sample_size"_a = py::none(), "runs"_a = 10, "master_seed"_a = 1,
        "format"_a = "csv",
        "Render the built-in benchmark table as a CSV or JSON string.");

    m.attr("CSV_HEADER") = std::string(kCsvHeader);
    m.attr("FLOOR_THRESHOLD") = kFloorThreshold;
}
