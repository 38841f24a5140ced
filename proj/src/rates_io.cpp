#include "hypoexp/rates_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "hypoexp/errors.hpp"

namespace hypoexp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view token, const char** rest) {
    const std::string buffer(token);
    char* end = nullptr;
    const double value = std::strtod(buffer.c_str(), &end);
    if (end == buffer.c_str()) {
        throw Error(errc::malformed_input, "not a number: '" + buffer + "'");
    }
    *rest = token.data() + (end - buffer.c_str());
    return value;
}

void append_token(std::vector<double>& out, std::string_view token) {
    token = trim(token);
    if (token.empty()) {
        throw Error(errc::malformed_input, "empty rate entry");
    }
    const char* rest = nullptr;
    const double value = parse_double(token, &rest);
    std::string_view tail(rest, static_cast<std::size_t>(token.data() + token.size() - rest));

    std::size_t count = 1;
    if (!tail.empty()) {
        if (tail.front() != 'x') {
            throw Error(errc::malformed_input,
                        "trailing characters in rate entry: '" + std::string(token) + "'");
        }
        tail.remove_prefix(1);
        const std::string digits(tail);
        char* end = nullptr;
        const unsigned long n = std::strtoul(digits.c_str(), &end, 10);
        if (end != digits.c_str() + digits.size() || digits.empty() || n < 1) {
            throw Error(errc::malformed_input,
                        "bad repetition count in '" + std::string(token) + "'");
        }
        count = n;
    }
    out.insert(out.end(), count, value);
}

}  // namespace

std::vector<double> parse_rates_inline(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view token =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        append_token(out, token);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> read_rates_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_failure, "cannot open rates file " + path.string());
    }
    std::vector<double> out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) continue;
        const char* rest = nullptr;
        const double value = parse_double(view, &rest);
        if (rest != view.data() + view.size()) {
            throw Error(errc::malformed_input,
                        path.string() + ":" + std::to_string(line_number) +
                            ": trailing characters after number");
        }
        out.push_back(value);
    }
    return out;
}

void write_rates_file(const std::filesystem::path& path, std::span<const double> rates) {
    std::ofstream out(path);
    if (!out) {
        throw Error(errc::io_failure, "cannot open " + path.string() + " for writing");
    }
    char buffer[64];
    for (const double rate : rates) {
        std::snprintf(buffer, sizeof(buffer), "%.17g", rate);
        out << buffer << '\n';
    }
    out.flush();
    if (!out) {
        throw Error(errc::io_failure, "failed while writing " + path.string());
    }
}

}  // namespace hypoexp
