#ifndef ELBOUND_ERRORS_HPP
#define ELBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elbound {

// Raised when an iterative numerical routine fails to meet its tolerance
// (quadrature that cannot reach the requested accuracy, a Newton solve that
// hits its iteration cap, an internal consistency check that trips).
// Domain violations use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class SolverError : public NumericalError {
public:
    SolverError(const std::string& what, double residual_norm, int iterations)
        : NumericalError(what), residual_norm(residual_norm), iterations(iterations) {}

    double residual_norm;
    int iterations;
};

} // namespace elbound

#endif
