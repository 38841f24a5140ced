#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace hypoexp {

/// Parses an inline rate list: comma-separated decimals, each optionally
/// with a repetition suffix ("0.03x10" is ten copies of 0.03).
/// Error(errc::malformed_input) on anything unparseable; value validation
/// (positivity etc.) happens later in validate_problem.
std::vector<double> parse_rates_inline(std::string_view text);

/// Rates file: one decimal per line, '#' starts a comment, blank lines
/// ignored.
std::vector<double> read_rates_file(const std::filesystem::path& path);

/// Writes rates one per line with round-trip precision ("%.17g"): reading
/// the file back reproduces the exact doubles.
void write_rates_file(const std::filesystem::path& path, std::span<const double> rates);

}  // namespace hypoexp
