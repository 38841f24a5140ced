#pragma once

#include <stdexcept>
#include <string>

namespace hypoexp {

enum class errc {
    non_positive_rate,
    non_finite_input,
    empty_rates,
    non_positive_threshold,
    invalid_order,
    duplicate_rates,
    non_square,
    non_finite,
    all_samples_rejected,
    malformed_input,
    io_failure,
};

const char* errc_name(errc code) noexcept;

/// Exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace hypoexp
