#pragma once

#include <stdexcept>
#include <string>

namespace iwg {

// Malformed files, out-of-range labels, invalid parameters.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Valid input, but the requested computation is not defined for it
// (disconnected Jacobian, non-conforming exponent sequence, ...).
struct math_error : std::runtime_error {
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size guard stopped the computation.
struct guard_error : math_error {
    explicit guard_error(const std::string& msg) : math_error(msg) {}
};

}  // namespace iwg
