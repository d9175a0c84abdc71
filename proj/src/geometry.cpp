#include "elbound/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "elbound/errors.hpp"
#include "elbound/linprog.hpp"

namespace elbound::geom {

PointCloud::PointCloud(std::size_t n, std::size_t k) : n_(n), k_(k), data_(n * k, 0.0) {}

PointCloud PointCloud::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    PointCloud c;
    c.n_ = rows.size();
    c.k_ = rows.size() ? rows.begin()->size() : 0;
    c.data_.reserve(c.n_ * c.k_);
    for (const auto& r : rows) {
        if (r.size() != c.k_) throw std::invalid_argument("PointCloud: ragged rows");
        c.data_.insert(c.data_.end(), r.begin(), r.end());
    }
    return c;
}

double PointCloud::row_norm(std::size_t i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < k_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
}

void PointCloud::validate() const {
    if (n_ < 1 || k_ < 1) throw std::invalid_argument("PointCloud: need n >= 1 and k >= 1");
    for (double v : data_)
        if (!std::isfinite(v)) throw std::invalid_argument("PointCloud: non-finite entry");
}

std::string PointCloud::to_csv() const {
    std::string out;
    char buf[40];
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < k_; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
            out += buf;
            out += (j + 1 < k_) ? ',' : '\n';
        }
    }
    return out;
}

PointCloud PointCloud::from_csv(std::istream& in) {
    PointCloud c;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("PointCloud: bad CSV cell '" + cell + "'");
            }
        }
        if (c.k_ == 0) c.k_ = row.size();
        if (row.size() != c.k_) throw std::invalid_argument("PointCloud: ragged CSV rows");
        c.data_.insert(c.data_.end(), row.begin(), row.end());
        ++c.n_;
    }
    if (c.n_ == 0) throw std::invalid_argument("PointCloud: empty CSV");
    return c;
}

PointCloud PointCloud::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("PointCloud: cannot open '" + path + "'");
    return from_csv(in);
}

namespace {

// Rank of the row span via column-pivoted Householder QR of the n x k matrix.
// If the rows do not span R^k, fills `null_dir` with a unit vector orthogonal
// to every row.
std::size_t row_span_rank(const PointCloud& cloud, std::vector<double>& null_dir) {
    const std::size_t n = cloud.n(), k = cloud.k();
    std::vector<double> a(cloud.flat().begin(), cloud.flat().end()); // n x k, mutated
    std::vector<std::size_t> perm(k);
    for (std::size_t j = 0; j < k; ++j) perm[j] = j;

    const std::size_t steps = std::min(n, k);
    double norm0 = 0.0;
    std::size_t rank = 0;
    for (std::size_t s = 0; s < steps; ++s) {
        // pivot: column with largest remaining norm
        std::size_t best = s;
        double best_norm = -1.0;
        for (std::size_t j = s; j < k; ++j) {
            double col = 0.0;
            for (std::size_t i = s; i < n; ++i) col += a[i * k + j] * a[i * k + j];
            if (col > best_norm) {
                best_norm = col;
                best = j;
            }
        }
        if (best != s) {
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i * k + s], a[i * k + best]);
            std::swap(perm[s], perm[best]);
        }
        const double col_norm = std::sqrt(std::max(best_norm, 0.0));
        if (s == 0) norm0 = col_norm;
        if (col_norm <= 1e-12 * std::max(norm0, 1.0)) break;
        ++rank;

        // Householder reflector for column s
        double alpha = a[s * k + s] >= 0.0 ? -col_norm : col_norm;
        std::vector<double> v(n - s);
        v[0] = a[s * k + s] - alpha;
        for (std::size_t i = s + 1; i < n; ++i) v[i - s] = a[i * k + s];
        double vnorm2 = 0.0;
        for (double t : v) vnorm2 += t * t;
        if (vnorm2 > 0.0) {
            for (std::size_t j = s; j < k; ++j) {
                double dot = 0.0;
                for (std::size_t i = s; i < n; ++i) dot += v[i - s] * a[i * k + j];
                const double f = 2.0 * dot / vnorm2;
                for (std::size_t i = s; i < n; ++i) a[i * k + j] -= f * v[i - s];
            }
        }
        a[s * k + s] = alpha;
    }

    if (rank >= k) return rank;

    // Null direction: solve R[0:r,0:r] z = -R[0:r, rank] by back substitution,
    // then undo the column permutation. With rank == 0 any unit vector works.
    null_dir.assign(k, 0.0);
    std::vector<double> z(rank, 0.0);
    if (rank > 0) {
        for (std::size_t i = rank; i-- > 0;) {
            double s = -a[i * k + rank];
            for (std::size_t j = i + 1; j < rank; ++j) s -= a[i * k + j] * z[j];
            z[i] = s / a[i * k + i];
        }
    }
    for (std::size_t j = 0; j < rank; ++j) null_dir[perm[j]] = z[j];
    null_dir[perm[rank]] = 1.0;
    double norm = 0.0;
    for (double t : null_dir) norm += t * t;
    norm = std::sqrt(norm);
    for (double& t : null_dir) t /= norm;
    return rank;
}

} // namespace

HullVerdict contains_origin(const PointCloud& cloud, double tol) {
    cloud.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("contains_origin: tol must be positive");
    const std::size_t n = cloud.n(), k = cloud.k();

    HullVerdict verdict;

    // Rows that do not span R^k leave a whole direction untouched; the hull is
    // flat and the origin cannot be interior.
    std::vector<double> null_dir;
    if (row_span_rank(cloud, null_dir) < k) {
        verdict.status = HullStatus::NotInterior;
        verdict.direction = std::move(null_dir);
        verdict.margin = 0.0;
        return verdict;
    }

    // maximize s >= 0  s.t.  sum_i w_i X_i = 0, sum_i w_i = 1, w_i >= s,
    // via u_i = w_i - s >= 0. Restricting s to be nonnegative loses nothing:
    // configurations whose best margin would be negative are exactly the
    // ones where the equality system has no nonnegative solution at all, and
    // those surface as LP infeasibility with a Farkas separating direction.
    lp::Problem p;
    p.m = k + 1;
    p.n = n + 1;
    p.A.assign(p.m * p.n, 0.0);
    p.b.assign(p.m, 0.0);
    p.c.assign(p.n, 0.0);
    std::vector<double> col_sum(k, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) col_sum[j] += cloud(i, j);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) p.A[j * p.n + i] = cloud(i, j);
        p.A[j * p.n + n] = col_sum[j];
    }
    for (std::size_t i = 0; i < n; ++i) p.A[k * p.n + i] = 1.0;
    p.A[k * p.n + n] = static_cast<double>(n);
    p.b[k] = 1.0;
    p.c[n] = -1.0; // minimize -s

    const lp::Solution sol = lp::solve(p);
    if (sol.status == lp::Status::IterationLimit || sol.status == lp::Status::Unbounded)
        throw NumericalError("contains_origin: simplex did not converge");

    if (sol.status == lp::Status::Infeasible) {
        // Farkas certificate: y with y'A_col <= 0 for every column. Columns
        // u_i give y_head . X_i + y_tail <= 0 with y_tail > 0, so -y_head
        // strictly separates the points from the origin.
        verdict.status = HullStatus::NotInterior;
        verdict.direction.assign(k, 0.0);
        double norm = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            verdict.direction[j] = -sol.y[j];
            norm += sol.y[j] * sol.y[j];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) throw NumericalError("contains_origin: degenerate Farkas certificate");
        for (double& d : verdict.direction) d /= norm;
        verdict.margin = -sol.objective; // infeasibility measure, negated
        return verdict;
    }

    const double margin = -sol.objective; // optimal s
    verdict.margin = margin;
    if (margin > tol) {
        verdict.status = HullStatus::Interior;
        verdict.weights.resize(n);
        const double s = sol.x[n];
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            verdict.weights[i] = sol.x[i] + s;
            total += verdict.weights[i];
        }
        for (double& w : verdict.weights) w /= total;
        // the certificate must actually reconstruct the origin
        double resid = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            double combo = 0.0;
            for (std::size_t i = 0; i < n; ++i) combo += verdict.weights[i] * cloud(i, j);
            resid += combo * combo;
        }
        if (std::sqrt(resid) > tol)
            throw NumericalError("contains_origin: interior certificate residual above tolerance");
        return verdict;
    }

    // Boundary or exterior: the optimal duals supply the supporting direction.
    verdict.status = HullStatus::NotInterior;
    verdict.direction.assign(k, 0.0);
    double norm = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        verdict.direction[j] = -sol.y[j];
        norm += sol.y[j] * sol.y[j];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalError("contains_origin: degenerate dual certificate");
    for (double& d : verdict.direction) d /= norm;
    return verdict;
}

PointCloud project_to_sphere(const PointCloud& cloud) {
    cloud.validate();
    PointCloud out(cloud.n(), cloud.k());
    for (std::size_t i = 0; i < cloud.n(); ++i) {
        const double norm = cloud.row_norm(i);
        if (!(norm > 1e-300))
            throw std::invalid_argument("project_to_sphere: row " + std::to_string(i) +
                                        " has zero norm");
        for (std::size_t j = 0; j < cloud.k(); ++j) out(i, j) = cloud(i, j) / norm;
    }
    return out;
}

} // namespace elbound::geom
