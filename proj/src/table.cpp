#include "hypoexp/table.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "hypoexp/exact.hpp"

namespace hypoexp {

namespace {

std::string format(const char* spec, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), spec, value);
    return buffer;
}

std::string sig6(double value) { return format("%.5e", value); }
std::string sig3(double value) { return format("%.2e", value); }

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const auto& flag : flags) {
        if (!out.empty()) out += ';';
        out += flag;
    }
    return out;
}

TableRow mc_row(const ModelSpec& model, const TrialSummary& summary) {
    TableRow row;
    row.model = model.name;
    row.algorithm = summary.algorithm;
    row.n = static_cast<int>(model.rates.size());
    row.t = model.threshold;
    row.sample_size = summary.sample_size;
    row.runs = summary.runs;
    row.estimate = summary.mean;
    row.cpu_seconds = summary.total_cpu_seconds;
    if (summary.re_defined) {
        row.re_hat = summary.re_hat;
        row.rtv = summary.rtv;
    } else {
        row.re_undefined = true;
        row.flags.push_back("undefined-re");
    }
    return row;
}

// Exact rows share the flag rule: catastrophic when the value is garbage
// (non-finite or outside [-1e-9, 1+1e-9]), floor-regime when it sits below
// the double-precision floor.
void flag_exact_value(TableRow& row, double value) {
    if (!std::isfinite(value) || value < -1e-9 || value > 1.0 + 1e-9) {
        row.flags.push_back("catastrophic");
    } else if (value < kFloorThreshold) {
        row.flags.push_back("floor-regime");
    }
}

TableRow ross_row(const ModelSpec& model, const Problem& problem) {
    TableRow row;
    row.model = model.name;
    row.algorithm = "exact-ross";
    row.n = static_cast<int>(model.rates.size());
    row.t = model.threshold;
    if (!problem.rates().pairwise_distinct()) {
        // Closed form inapplicable with repeated rates; report it the way it
        // fails rather than omitting the row.
        row.estimate = std::numeric_limits<double>::quiet_NaN();
        row.flags.push_back("catastrophic");
        return row;
    }
    const auto start = std::chrono::steady_clock::now();
    const RossResult result = ross_cdf(problem);
    const auto stop = std::chrono::steady_clock::now();
    row.estimate = result.value;
    row.cpu_seconds = std::chrono::duration<double>(stop - start).count();
    if (result.report.verdict == Verdict::catastrophic) {
        row.flags.push_back("catastrophic");
    } else if (result.value < kFloorThreshold) {
        row.flags.push_back("floor-regime");
    }
    return row;
}

TableRow expm_row(const ModelSpec& model, const Problem& problem) {
    TableRow row;
    row.model = model.name;
    row.algorithm = "exact-expm";
    row.n = static_cast<int>(model.rates.size());
    row.t = model.threshold;
    const auto start = std::chrono::steady_clock::now();
    const SurvivalResult survival = expm_survival(problem);
    const auto stop = std::chrono::steady_clock::now();
    row.estimate = 1.0 - survival.raw;
    row.cpu_seconds = std::chrono::duration<double>(stop - start).count();
    flag_exact_value(row, *row.estimate);
    return row;
}

TableRow oracle_row(const ModelSpec& model) {
    TableRow row;
    row.model = model.name;
    row.algorithm = std::string("oracle:") + to_string(model.oracle_provenance);
    row.n = static_cast<int>(model.rates.size());
    row.t = model.threshold;
    row.estimate = model.oracle_value;
    row.flags.push_back("oracle");
    return row;
}

}  // namespace

std::vector<TableRow> build_model_table(const BenchConfig& config) {
    std::vector<TableRow> rows;
    for (const ModelSpec& model : builtin_models()) {
        const Problem problem = model.problem();
        const std::uint64_t n_samples =
            config.fixed_sample_size.value_or(100 * model.rates.size());

        rows.push_back(mc_row(model, run_trials(problem, EstimatorKind::importance_sampling,
                                                n_samples, config.runs, config.master_seed)));
        rows.push_back(ross_row(model, problem));
        rows.push_back(expm_row(model, problem));
        rows.push_back(mc_row(model, run_trials(problem, EstimatorKind::crude_monte_carlo,
                                                n_samples, config.runs, config.master_seed)));
        rows.push_back(oracle_row(model));
    }
    return rows;
}

std::string render_csv(const std::vector<TableRow>& rows) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const TableRow& row : rows) {
        out += row.model;
        out += ',';
        out += row.algorithm;
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += format("%g", row.t);
        out += ',';
        if (row.sample_size) out += std::to_string(*row.sample_size);
        out += ',';
        if (row.runs) out += std::to_string(*row.runs);
        out += ',';
        if (row.estimate) out += sig6(*row.estimate);
        out += ',';
        if (row.re_undefined) {
            out += "undefined,undefined";
        } else {
            if (row.re_hat) out += sig3(*row.re_hat);
            out += ',';
            if (row.rtv) out += sig3(*row.rtv);
        }
        out += ',';
        if (row.cpu_seconds) out += format("%.6f", *row.cpu_seconds);
        out += ',';
        out += join_flags(row.flags);
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<TableRow>& rows) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
        nlohmann::ordered_json item;
        item["model"] = row.model;
        item["algorithm"] = row.algorithm;
        item["n"] = row.n;
        item["t"] = row.t;
        item["N"] = row.sample_size ? nlohmann::ordered_json(*row.sample_size)
                                    : nlohmann::ordered_json(nullptr);
        item["K"] = row.runs ? nlohmann::ordered_json(*row.runs) : nlohmann::ordered_json(nullptr);
        // NaN serializes as null by the library's rules, which is what the
        // schema wants for an inapplicable estimate.
        item["estimate"] = row.estimate ? nlohmann::ordered_json(*row.estimate)
                                        : nlohmann::ordered_json(nullptr);
        item["re_hat"] = (row.re_hat && !row.re_undefined)
                             ? nlohmann::ordered_json(*row.re_hat)
                             : nlohmann::ordered_json(nullptr);
        item["rtv"] = (row.rtv && !row.re_undefined) ? nlohmann::ordered_json(*row.rtv)
                                                     : nlohmann::ordered_json(nullptr);
        item["cpu_seconds"] = row.cpu_seconds ? nlohmann::ordered_json(*row.cpu_seconds)
                                              : nlohmann::ordered_json(nullptr);
        item["flags"] = row.flags;
        array.push_back(std::move(item));
    }
    return array.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(errc::io_failure, "cannot open " + path.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error(errc::io_failure, "failed while writing " + path.string());
    }
}

}  // namespace hypoexp
