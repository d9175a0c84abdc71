#ifndef ELBOUND_GEOMETRY_HPP
#define ELBOUND_GEOMETRY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace elbound::geom {

// n points in R^k, row i is one observation (an X_i, or an estimating
// function value m(Y_i, theta)). Row-major storage.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t n, std::size_t k);
    static PointCloud from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * k_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * k_ + j]; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * k_, k_}; }
    std::span<const double> flat() const { return data_; }

    double row_norm(std::size_t i) const;

    // Throws std::invalid_argument on NaN/Inf entries or empty dimensions.
    void validate() const;

    // One row per point, k comma-separated columns, full float precision,
    // no header, LF line endings.
    std::string to_csv() const;
    static PointCloud from_csv(std::istream& in);
    static PointCloud load_csv(const std::string& path);

private:
    std::size_t n_ = 0, k_ = 0;
    std::vector<double> data_;
};

enum class HullStatus { Interior, NotInterior };

// Verdict of the origin-in-hull-interior test together with a checkable
// certificate: convex weights reconstructing the origin for Interior, a unit
// direction with d.X_i >= -tol for NotInterior (a supporting or separating
// hyperplane through the origin).
struct HullVerdict {
    HullStatus status = HullStatus::NotInterior;
    std::vector<double> weights;   // Interior: length n, w_i >= 0, sum 1
    std::vector<double> direction; // NotInterior: unit length-k vector
    double margin = 0.0;           // best interior weight margin found by the LP

    bool interior() const { return status == HullStatus::Interior; }
};

// Is the origin in the interior of the convex hull of the rows?
//
// Decided as a linear feasibility problem: maximize s subject to
// sum w_i X_i = 0, sum w_i = 1, w_i >= s. The origin is interior exactly
// when the rows span R^k and the optimal margin is positive; otherwise the
// LP duals (or a null direction of the span) provide the separating
// certificate. Boundary configurations within tol resolve to NotInterior.
// Exact duplicate rows are harmless; they only repeat a hull vertex.
HullVerdict contains_origin(const PointCloud& cloud, double tol = 1e-9);

// Radial projection onto the unit sphere: row i becomes X_i / ||X_i||.
// Rows with norm below 1e-300 are rejected (domain error naming the row).
// The hull verdict is invariant under this map, row by row.
PointCloud project_to_sphere(const PointCloud& cloud);

} // namespace elbound::geom

#endif
