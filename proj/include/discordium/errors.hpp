#pragma once

#include <stdexcept>
#include <string>

namespace discordium {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct not_hermitian : error {
    using error::error;
};

struct trace_not_one : error {
    using error::error;
};

struct not_positive : error {
    using error::error;
};

struct convergence_failure : error {
    using error::error;
};

struct support_violation : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

struct unsupported_dimension : error {
    using error::error;
};

struct parameter_out_of_range : error {
    using error::error;
};

struct missing_basis : error {
    using error::error;
};

/// Raised when a state file cannot be parsed; carries the 1-based
/// position of the offending token.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t line, std::size_t column)
        : error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace discordium
