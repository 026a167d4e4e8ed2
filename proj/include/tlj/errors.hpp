#pragma once

#include <stdexcept>
#include <string>

namespace tlj {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid mathematical input (bad index, nonpositive quantum-integer order, ...).
struct domain_error : error {
    using error::error;
};

/// Two elements of different strand counts were combined.
struct size_mismatch_error : error {
    using error::error;
};

/// A configured resource cap (strand count, module weight) was exceeded.
struct resource_limit_error : error {
    using error::error;
};

/// Numeric evaluation hit a pole of a rational function.
struct eval_error : error {
    using error::error;
};

/// Expression could not be parsed; `position` is a 0-based offset into the input.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " (at offset " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

} // namespace tlj
