#include "elbound/el.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "elbound/errors.hpp"
#include "elbound/special.hpp"

namespace elbound::el {

namespace {

// Solve the SPD system H x = g in place via Cholesky; returns false if a
// pivot collapses (rows of m do not span, or extreme ill-conditioning).
bool cholesky_solve(std::vector<double>& h, std::vector<double>& x, std::size_t k) {
    // factor H = L L'
    for (std::size_t j = 0; j < k; ++j) {
        double d = h[j * k + j];
        for (std::size_t s = 0; s < j; ++s) d -= h[j * k + s] * h[j * k + s];
        if (!(d > 1e-300)) return false;
        const double l = std::sqrt(d);
        h[j * k + j] = l;
        for (std::size_t i = j + 1; i < k; ++i) {
            double v = h[i * k + j];
            for (std::size_t s = 0; s < j; ++s) v -= h[i * k + s] * h[j * k + s];
            h[i * k + j] = v / l;
        }
    }
    // forward then backward substitution
    for (std::size_t i = 0; i < k; ++i) {
        double v = x[i];
        for (std::size_t s = 0; s < i; ++s) v -= h[i * k + s] * x[s];
        x[i] = v / h[i * k + i];
    }
    for (std::size_t i = k; i-- > 0;) {
        double v = x[i];
        for (std::size_t s = i + 1; s < k; ++s) v -= h[s * k + i] * x[s];
        x[i] = v / h[i * k + i];
    }
    return true;
}

} // namespace

ELEvaluation el_logratio(const ELInput& input) {
    const geom::PointCloud& m = input.m_values;
    m.validate();
    const std::size_t n = m.n(), k = m.k();

    ELEvaluation ev;
    const geom::HullVerdict hull = geom::contains_origin(m);
    if (!hull.interior()) {
        ev.status = ELStatus::OutsideHull;
        ev.log_ratio = std::numeric_limits<double>::infinity();
        return ev;
    }

    // Maximize f(lambda) = sum_i log(1 + lambda'm_i), the concave dual of the
    // weight problem. At the optimum w_i = 1 / (n (1 + lambda'm_i)) and
    // l(theta) = 2 f(lambda).
    const double dn = static_cast<double>(n);
    std::vector<double> lambda(k, 0.0);
    std::vector<double> t(n, 1.0); // t_i = 1 + lambda'm_i
    std::vector<double> grad(k), step(k), hess(k * k), trial(n);

    const auto eval_t = [&](const std::vector<double>& lam, std::vector<double>& out) {
        double min_t = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            double v = 1.0;
            for (std::size_t j = 0; j < k; ++j) v += lam[j] * m(i, j);
            out[i] = v;
            min_t = std::min(min_t, v);
        }
        return min_t;
    };
    const auto objective = [&](const std::vector<double>& tv) {
        double f = 0.0;
        for (double v : tv) f += std::log(v);
        return f;
    };

    double f_cur = 0.0;
    double grad_norm = 0.0;
    int iter = 0;
    for (; iter < 100; ++iter) {
        grad.assign(k, 0.0);
        hess.assign(k * k, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double inv = 1.0 / t[i];
            const double inv2 = inv * inv;
            for (std::size_t j = 0; j < k; ++j) {
                grad[j] += m(i, j) * inv;
                for (std::size_t l = 0; l <= j; ++l) hess[j * k + l] += m(i, j) * m(i, l) * inv2;
            }
        }
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l) hess[j * k + l] = hess[l * k + j];

        grad_norm = 0.0;
        for (double g : grad) grad_norm += g * g;
        grad_norm = std::sqrt(grad_norm);
        if (grad_norm <= 1e-10) break;

        step = grad;
        std::vector<double> h = hess;
        if (!cholesky_solve(h, step, k))
            throw SolverError("el_logratio: singular Hessian in dual Newton", grad_norm, iter);

        // Backtrack: stay within the 1 + lambda'm_i >= 1/n margin. Accept on
        // objective increase as long as f can register one; once the
        // predicted Newton gain g'H^-1 g / 2 drops below double resolution,
        // accept on a strict decrease of the gradient norm instead (the
        // local contraction finishes the job even though f looks flat).
        const auto grad_norm_at = [&](const std::vector<double>& tv) {
            std::vector<double> g(k, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < k; ++j) g[j] += m(i, j) / tv[i];
            double s = 0.0;
            for (double v : g) s += v * v;
            return std::sqrt(s);
        };
        double predicted_gain = 0.0;
        for (std::size_t j = 0; j < k; ++j) predicted_gain += 0.5 * grad[j] * step[j];
        const bool f_saturated = predicted_gain <= 1e-12 * (1.0 + std::fabs(f_cur));

        double alpha = 1.0;
        bool moved = false;
        std::vector<double> lam_trial(k);
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t j = 0; j < k; ++j) lam_trial[j] = lambda[j] + alpha * step[j];
            const double min_t = eval_t(lam_trial, trial);
            if (min_t >= 1.0 / dn) {
                const double f_trial = objective(trial);
                if (f_trial > f_cur || (f_saturated && grad_norm_at(trial) < 0.9 * grad_norm)) {
                    lambda = lam_trial;
                    t = trial;
                    f_cur = f_trial;
                    moved = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if (!moved) {
            if (grad_norm > 1e-9 * (1.0 + dn))
                throw SolverError("el_logratio: dual line search stalled", grad_norm, iter);
            break;
        }
    }
    if (grad_norm > 1e-9 * (1.0 + dn))
        throw SolverError("el_logratio: dual Newton did not converge", grad_norm, iter);

    ev.status = ELStatus::Interior;
    ev.lambda = lambda;
    ev.iterations = iter;
    ev.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) ev.weights[i] = 1.0 / (dn * t[i]);
    ev.log_ratio = std::max(0.0, 2.0 * f_cur);
    return ev;
}

bool in_region(const ELInput& input, const RegionSpec& spec) {
    if (!(spec.radius > 0.0) || !std::isfinite(spec.radius))
        throw std::invalid_argument("in_region: radius must be finite and positive");
    const ELEvaluation ev = el_logratio(input);
    return ev.log_ratio < spec.radius;
}

double chisq_radius(long k, double level) {
    if (!(level > 0.0) || !(level < 1.0))
        throw std::invalid_argument("chisq_radius: level must lie in (0, 1)");
    return special::chisq_quantile(k, level);
}

geom::PointCloud mean_functional(const geom::PointCloud& y, std::span<const double> theta) {
    if (theta.size() != y.k())
        throw std::invalid_argument("mean_functional: theta dimension mismatch");
    geom::PointCloud out(y.n(), y.k());
    for (std::size_t i = 0; i < y.n(); ++i)
        for (std::size_t j = 0; j < y.k(); ++j) out(i, j) = y(i, j) - theta[j];
    return out;
}

} // namespace elbound::el
