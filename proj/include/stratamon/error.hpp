#pragma once

#include <stdexcept>
#include <string>

namespace stratamon {

// Error taxonomy mirrored by the CLI exit codes: bad input (1),
// out-of-scope but well-formed request (2), broken internal invariant (3).

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stratamon
