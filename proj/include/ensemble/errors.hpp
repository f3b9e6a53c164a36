#pragma once

#include <stdexcept>
#include <string>

namespace ensemble {

// Solver gave up before reaching the requested residual.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}

    double residual;
    int iterations;
};

// Input exceeds a configured exact-computation ceiling.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ensemble
