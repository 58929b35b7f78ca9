#pragma once

#include <stdexcept>
#include <string>

namespace cam {

// Bad arguments or inputs outside a function's documented domain.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative scheme (quadrature, bisection, extrapolation) failed to reach
// its tolerance within its budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that the requested operation does not support,
// e.g. coupling values where a parametrization breaks down, or quantum
// parameters whose parity rules out a kernel block.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cam
