#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypoexp/bench.hpp"

namespace hypoexp {

inline constexpr std::string_view kCsvHeader =
    "model,algorithm,n,t,N,K,estimate,re_hat,rtv,cpu_seconds,flags";

/// One benchmark-table row. Absent optional fields render as empty CSV cells
/// / JSON nulls; re_undefined renders as the string "undefined" (the flag
/// list then carries "undefined-re").
struct TableRow {
    std::string model;
    std::string algorithm;
    int n = 0;
    double t = 0.0;
    std::optional<std::uint64_t> sample_size;
    std::optional<int> runs;
    std::optional<double> estimate;
    std::optional<double> re_hat;
    bool re_undefined = false;
    std::optional<double> rtv;
    std::optional<double> cpu_seconds;
    std::vector<std::string> flags;  // from {floor-regime, catastrophic, undefined-re, oracle}
};

struct BenchConfig {
    std::optional<std::uint64_t> fixed_sample_size;  // empty: N = 100n per model
    int runs = 10;
    std::uint64_t master_seed = 1;
};

/// Five rows per built-in model: is, exact-ross, exact-expm, crude-mc, and
/// the oracle row (algorithm "oracle:<provenance>").
std::vector<TableRow> build_model_table(const BenchConfig& config);

std::string render_csv(const std::vector<TableRow>& rows);
std::string render_json(const std::vector<TableRow>& rows);

/// Writes content to path; Error(errc::io_failure) when the stream fails.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace hypoexp
