#ifndef ELBOUND_QUADRATURE_HPP
#define ELBOUND_QUADRATURE_HPP

#include <functional>

namespace elbound::quad {

// Adaptive Gauss-Kronrod 7-15 integration of f over [a, b] to an absolute
// tolerance. Panels are bisected until the local Kronrod-Gauss discrepancy
// fits within the panel's share of the budget. Throws NumericalError if the
// subdivision limit is reached first.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol);

} // namespace elbound::quad

#endif
