#ifndef EULER_ERROR_H
#define EULER_ERROR_H

#include <stdexcept>
#include <string>

namespace euler {

// Bad user-supplied configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Caller handed an operation data violating its preconditions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime consistency check failed (discretization too coarse, bound
// violated, backward characteristic leaving through the outflow wall, ...).
struct DiagnosticError : std::runtime_error {
    explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace euler

#endif
