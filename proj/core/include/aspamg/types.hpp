/// @file types.hpp
/// @brief Shared scalar/index types and the error hierarchy.

#ifndef ASPAMG_TYPES_HPP
#define ASPAMG_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aspamg {

using index_t = std::int64_t;

/// Mismatched operand sizes (matrix-vector, matrix-matrix).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// SPD assumption violated (non-positive pivot, p'Ap <= 0, ...).
struct NotSpdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure outside the SPD contract (eigensolver stall, singular factor).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: unknown key, out-of-range parameter, invalid material.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// File-level failure; carries the 1-based line number when known (0 otherwise).
struct IoError : std::runtime_error {
    index_t line = 0;
    IoError(const std::string& msg, index_t line_no = 0)
        : std::runtime_error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
};

} // namespace aspamg

#endif // ASPAMG_TYPES_HPP
