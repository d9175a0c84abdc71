#include "elbound/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace elbound::lp {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-9;
constexpr double kFeasEps = 1e-8;

// Full-tableau simplex over the original columns plus one artificial column
// per row. The artificial columns double as an embedded record of B^-1, which
// is what lets us read the duals (and Farkas certificates) off the cost row.
class Tableau {
public:
    explicit Tableau(const Problem& p)
        : m_(p.m), n_(p.n), width_(p.n + p.m + 1), t_((p.m + 1) * (p.n + p.m + 1), 0.0) {
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const double sign = p.b[i] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * p.A[i * n_ + j];
            at(i, n_ + i) = 1.0;
            rhs(i) = sign * p.b[i];
            basis_[i] = n_ + i;
        }
    }

    double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
    double& rhs(std::size_t i) { return t_[i * width_ + width_ - 1]; }
    double& cost(std::size_t j) { return t_[m_ * width_ + j]; }
    double& objective() { return t_[m_ * width_ + width_ - 1]; }

    // Install reduced costs for objective vector c (artificials get c = art_cost)
    // given the current basis.
    void set_objective(const std::vector<double>& c, double art_cost) {
        for (std::size_t j = 0; j < n_ + m_; ++j)
            cost(j) = j < n_ ? c[j] : art_cost;
        objective() = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            const double cb = basis_[i] < n_ ? c[basis_[i]] : art_cost;
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < n_ + m_; ++j) cost(j) -= cb * at(i, j);
            objective() -= cb * rhs(i);
        }
    }

    // Price out, pivot, repeat. Returns false if the problem is unbounded.
    // Dantzig pricing, with a permanent switch to Bland's rule if the
    // iteration count suggests cycling.
    bool iterate(std::size_t max_iters, bool& hit_limit) {
        hit_limit = false;
        std::size_t iters = 0;
        const std::size_t bland_after = 64 * (m_ + n_ + 8);
        std::vector<char> banned(n_ + m_, 0);
        while (true) {
            if (iters++ > max_iters) {
                hit_limit = true;
                return true;
            }
            const bool bland = iters > bland_after;
            const std::size_t enter = choose_entering(bland, banned);
            if (enter == npos) return true; // optimal
            const std::size_t leave = choose_leaving(enter);
            if (leave == npos) {
                // No limiting row. Split variables (s = sp - sn) make the
                // mirror of a basic column look like a ray once the cost row
                // has accumulated pivot noise, and all-dust columns do the
                // same; neither is a real improving direction. Only a
                // decisively negative reduced cost means unbounded.
                double col_max = 0.0;
                for (std::size_t i = 0; i < m_; ++i)
                    col_max = std::max(col_max, std::fabs(t_[i * width_ + enter]));
                const double rc = t_[m_ * width_ + enter];
                if (col_max <= 1e-7 || rc >= -1e-4) {
                    banned[enter] = 1;
                    continue;
                }
                return false;
            }
            pivot(leave, enter);
            std::fill(banned.begin(), banned.end(), 0);
        }
    }

    std::vector<double> primal() const {
        std::vector<double> x(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i * width_ + width_ - 1];
        return x;
    }

    // y_i = (cost of artificial i) - (reduced cost under artificial column i).
    std::vector<double> duals(double art_cost) {
        std::vector<double> y(m_);
        for (std::size_t i = 0; i < m_; ++i) y[i] = art_cost - cost(n_ + i);
        return y;
    }

    // After phase 1: drive artificial variables out of the basis where a
    // usable pivot on an original column exists (largest magnitude, for
    // conditioning); rows that stay artificial are redundant constraints
    // sitting at zero.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t best = npos;
            double best_mag = kPivotEps;
            for (std::size_t j = 0; j < n_; ++j) {
                const double mag = std::fabs(at(i, j));
                if (mag > best_mag) {
                    best_mag = mag;
                    best = j;
                }
            }
            if (best != npos) pivot(i, best);
        }
    }

    void forbid_artificials() { artificials_forbidden_ = true; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t choose_entering(bool bland, const std::vector<char>& banned) const {
        const std::size_t limit = artificials_forbidden_ ? n_ : n_ + m_;
        std::size_t best = npos;
        double best_cost = -kCostEps;
        for (std::size_t j = 0; j < limit; ++j) {
            if (banned[j]) continue;
            const double cj = t_[m_ * width_ + j];
            if (cj < best_cost) {
                if (bland) return j;
                best_cost = cj;
                best = j;
            }
        }
        return best;
    }

    std::size_t choose_leaving(std::size_t enter) const {
        std::size_t best = npos;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m_; ++i) {
            const double a = t_[i * width_ + enter];
            if (a <= kPivotEps) continue;
            const double ratio = t_[i * width_ + width_ - 1] / a;
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && best != npos && basis_[i] < basis_[best])) {
                best_ratio = ratio;
                best = i;
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t col) {
        const double p = at(row, col);
        for (std::size_t j = 0; j < width_; ++j) t_[row * width_ + j] /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == row) continue;
            const double f = t_[i * width_ + col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width_; ++j) t_[i * width_ + j] -= f * t_[row * width_ + j];
            t_[i * width_ + col] = 0.0;
        }
        basis_[row] = col;
    }

    std::size_t m_, n_, width_;
    std::vector<double> t_;
    std::vector<std::size_t> basis_;
    bool artificials_forbidden_ = false;
};

} // namespace

Solution solve(const Problem& p) {
    if (p.A.size() != p.m * p.n || p.b.size() != p.m || p.c.size() != p.n)
        throw std::invalid_argument("lp::solve: inconsistent problem dimensions");

    Solution sol;
    Tableau t(p);
    const std::size_t max_iters = 2000 + 200 * (p.m + p.n);

    // Phase 1: minimize the sum of artificials.
    t.set_objective(std::vector<double>(p.n, 0.0), 1.0);
    bool hit_limit = false;
    if (!t.iterate(max_iters, hit_limit)) {
        sol.status = Status::Unbounded; // cannot happen: phase-1 objective >= 0
        return sol;
    }
    if (hit_limit) {
        sol.status = Status::IterationLimit;
        return sol;
    }
    const double infeasibility = -t.objective();
    if (infeasibility > kFeasEps) {
        sol.status = Status::Infeasible;
        sol.objective = infeasibility;
        // Farkas: y'A_j <= 0 for every original column, y'b = infeasibility > 0.
        sol.y = t.duals(1.0);
        // Undo the row sign flips applied for b >= 0.
        for (std::size_t i = 0; i < p.m; ++i)
            if (p.b[i] < 0.0) sol.y[i] = -sol.y[i];
        return sol;
    }
    t.expel_artificials();
    t.forbid_artificials();

    // Phase 2: the real objective.
    t.set_objective(p.c, 0.0);
    if (!t.iterate(max_iters, hit_limit)) {
        sol.status = Status::Unbounded;
        return sol;
    }
    if (hit_limit) {
        sol.status = Status::IterationLimit;
        return sol;
    }

    sol.status = Status::Optimal;
    sol.x = t.primal();
    sol.objective = -t.objective();
    sol.y = t.duals(0.0);
    for (std::size_t i = 0; i < p.m; ++i)
        if (p.b[i] < 0.0) sol.y[i] = -sol.y[i];
    return sol;
}

} // namespace elbound::lp
