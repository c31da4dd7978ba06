#pragma once

#include <stdexcept>

namespace altperm {

// Raised when a request is well-formed but not something the library does:
// unknown rule or class name, counting method not applicable to the input.
// Distinct from std::invalid_argument (malformed input) and std::domain_error
// (valid input outside an operation's mathematical domain).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace altperm
