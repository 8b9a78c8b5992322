#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquebound {

// Caller passed arguments outside an operation's domain.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed external input (graph6 text). byte_offset points at the
// offending byte of the input string.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

// A cooperative search budget ran out before the result was exact.
struct budget_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact integer arithmetic would not fit in 128 bits.
struct arithmetic_overflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

}  // namespace cliquebound
