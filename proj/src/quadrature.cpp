#include "elbound/quadrature.hpp"

#include <cmath>
#include <stack>
#include <stdexcept>

#include "elbound/errors.hpp"

namespace elbound::quad {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (nonnegative half) and weights,
// with the embedded 7-point Gauss weights. QUADPACK dqk15 constants.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct PanelResult {
    double kronrod;
    double gauss;
};

PanelResult eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(center - dx) + f(center + dx);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    return {kron * half, gauss * half};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be positive");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    struct Panel {
        double a, b, tol;
        int depth;
    };
    std::stack<Panel> todo;
    todo.push({a, b, abs_tol, 0});
    double total = 0.0;
    while (!todo.empty()) {
        const Panel p = todo.top();
        todo.pop();
        const PanelResult r = eval_panel(f, p.a, p.b);
        const double err = std::fabs(r.kronrod - r.gauss);
        if (err <= p.tol || err <= 1e-16 * std::fabs(r.kronrod)) {
            total += r.kronrod;
            continue;
        }
        if (p.depth >= 48)
            throw NumericalError("integrate: adaptive subdivision limit reached");
        const double mid = 0.5 * (p.a + p.b);
        todo.push({p.a, mid, 0.5 * p.tol, p.depth + 1});
        todo.push({mid, p.b, 0.5 * p.tol, p.depth + 1});
    }
    return sign * total;
}

} // namespace elbound::quad
