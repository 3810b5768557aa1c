#pragma once

#include <stdexcept>
#include <string>

namespace stabwall {

// Raised for malformed configuration or input files. CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation's stated precondition fails. CLI exit code 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal invariant is violated. CLI exit code 4.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace stabwall
