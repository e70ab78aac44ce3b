#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace l1pde {

/** Uniform periodic grid on [xmin, xmax)^dim with n points per axis.
 *  Spacing h = (xmax - xmin) / n; point i sits at xmin + i*h.
 *  2D fields are stored row-major: index (i, j) -> i*n + j. */
struct Grid {
    int dim = 1;
    int n = 0;
    double xmin = 0.0;
    double xmax = 1.0;

    Grid() = default;
    Grid(int dim, int n, double xmin, double xmax);

    double spacing() const { return (xmax - xmin) / n; }
    std::size_t size() const { return dim == 1 ? std::size_t(n) : std::size_t(n) * n; }
    double coord(int i) const { return xmin + i * spacing(); }
    /// Measure of one cell, h^dim.
    double cell_measure() const;
    /// Measure of the whole domain, (xmax - xmin)^dim.
    double domain_measure() const;

    bool operator==(const Grid&) const = default;
};

/** Values on a Grid; the universal state object of every solver. */
struct Field {
    Grid grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(const Grid& g) : grid(g), values(g.size(), 0.0) {}
    Field(const Grid& g, std::vector<double> v);

    double& operator[](std::size_t k) { return values[k]; }
    double operator[](std::size_t k) const { return values[k]; }
    double& at(int i, int j) { return values[std::size_t(i) * grid.n + j]; }
    double at(int i, int j) const { return values[std::size_t(i) * grid.n + j]; }

    /// True iff every entry is finite.
    bool finite() const;
};

/// Sample a function of the grid coordinates. fn receives (x) in 1D, (x, y) in 2D.
Field sample(const Grid& g, const std::function<double(double)>& fn);
Field sample2(const Grid& g, const std::function<double(double, double)>& fn);

/** Exact-zero mask of a Field with its measure (cell count times h^dim). */
struct SupportSet {
    std::vector<std::uint8_t> mask;
    double measure = 0.0;
    std::size_t count = 0;
};

enum class Norm { l1, l2, linf };

/// Discrete Lq norm: (sum |u_i|^q h^dim)^(1/q) for q in {1,2}; max |u_i| for q = inf.
double norm(const Field& u, Norm q);

/// Discrete total variation: sum of absolute neighbor differences, periodic wrap.
double total_variation(const Field& u);

/// Support by exact (bitwise) zeros.
SupportSet support(const Field& u);

/// Left/right endpoints of the 1D support: outermost nonzero cell center -/+ h/2.
/// Returns {nan, nan} for an empty support.
struct SupportExtent {
    double left;
    double right;
    bool empty;
};
SupportExtent support_extent_1d(const Field& u);

/// Compensated (pairwise) sum, used where 1e-12-level mass bookkeeping matters.
double stable_sum(const double* data, std::size_t n);

} // namespace l1pde
