#ifndef ELBOUND_LINPROG_HPP
#define ELBOUND_LINPROG_HPP

#include <cstddef>
#include <vector>

namespace elbound::lp {

// Dense linear program in standard form:
//
//   minimize    c'x
//   subject to  A x = b,  x >= 0
//
// Solved by a two-phase primal simplex. Sized for the small problems the
// hull test produces (tens of rows, hundreds of columns).
struct Problem {
    std::size_t m = 0; // rows
    std::size_t n = 0; // columns
    std::vector<double> A; // row-major m*n
    std::vector<double> b; // m
    std::vector<double> c; // n
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
    Status status = Status::IterationLimit;
    double objective = 0.0;
    std::vector<double> x; // primal solution when Optimal
    // When Optimal: duals y with y'A <= c' (up to tolerance) and y'b = objective.
    // When Infeasible: a Farkas certificate y with y'A <= 0 and y'b > 0.
    std::vector<double> y;
};

Solution solve(const Problem& p);

} // namespace elbound::lp

#endif
