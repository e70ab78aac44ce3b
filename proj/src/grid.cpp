#include "l1pde/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "l1pde/errors.hpp"

namespace l1pde {

Grid::Grid(int dim_, int n_, double xmin_, double xmax_)
    : dim(dim_), n(n_), xmin(xmin_), xmax(xmax_) {
    if (dim != 1 && dim != 2)
        throw ConfigError("grid dimension must be 1 or 2");
    if (n < 4)
        throw ConfigError("grid needs at least 4 points per axis");
    if (!(xmax > xmin))
        throw ConfigError("grid extent must satisfy xmax > xmin");
}

double Grid::cell_measure() const {
    const double h = spacing();
    return dim == 1 ? h : h * h;
}

double Grid::domain_measure() const {
    const double L = xmax - xmin;
    return dim == 1 ? L : L * L;
}

Field::Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw ConfigError("field length does not match grid point count");
}

bool Field::finite() const {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

Field sample(const Grid& g, const std::function<double(double)>& fn) {
    if (g.dim != 1)
        throw ConfigError("sample: 1D grid required");
    Field u(g);
    for (int i = 0; i < g.n; ++i) u.values[i] = fn(g.coord(i));
    return u;
}

Field sample2(const Grid& g, const std::function<double(double, double)>& fn) {
    if (g.dim != 2)
        throw ConfigError("sample2: 2D grid required");
    Field u(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) u.at(i, j) = fn(g.coord(i), g.coord(j));
    return u;
}

double stable_sum(const double* data, std::size_t n) {
    // pairwise reduction; error grows like log(n)*eps instead of n*eps
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return stable_sum(data, half) + stable_sum(data + half, n - half);
}

namespace {

double stable_accumulate(const std::vector<double>& v,
                         const std::function<double(double)>& term) {
    std::vector<double> tmp(v.size());
    std::transform(v.begin(), v.end(), tmp.begin(), term);
    return stable_sum(tmp.data(), tmp.size());
}

} // namespace

double norm(const Field& u, Norm q) {
    const double hd = u.grid.cell_measure();
    switch (q) {
        case Norm::l1:
            return hd * stable_accumulate(u.values, [](double v) { return std::abs(v); });
        case Norm::l2:
            return std::sqrt(hd * stable_accumulate(u.values, [](double v) { return v * v; }));
        case Norm::linf: {
            double m = 0.0;
            for (double v : u.values) m = std::max(m, std::abs(v));
            return m;
        }
    }
    return 0.0;
}

double total_variation(const Field& u) {
    const int n = u.grid.n;
    double tv = 0.0;
    if (u.grid.dim == 1) {
        for (int i = 0; i < n; ++i) {
            const int ip = (i + 1 == n) ? 0 : i + 1;
            tv += std::abs(u.values[ip] - u.values[i]);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const int ip = (i + 1 == n) ? 0 : i + 1;
            for (int j = 0; j < n; ++j) {
                const int jp = (j + 1 == n) ? 0 : j + 1;
                tv += std::abs(u.at(ip, j) - u.at(i, j));
                tv += std::abs(u.at(i, jp) - u.at(i, j));
            }
        }
    }
    return tv;
}

SupportSet support(const Field& u) {
    SupportSet s;
    s.mask.resize(u.values.size());
    for (std::size_t k = 0; k < u.values.size(); ++k) {
        s.mask[k] = (u.values[k] != 0.0);
        s.count += s.mask[k];
    }
    s.measure = double(s.count) * u.grid.cell_measure();
    return s;
}

SupportExtent support_extent_1d(const Field& u) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (u.grid.dim != 1) return {nan, nan, true};
    int lo = -1, hi = -1;
    for (int i = 0; i < u.grid.n; ++i) {
        if (u.values[i] != 0.0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    if (lo < 0) return {nan, nan, true};
    const double h = u.grid.spacing();
    return {u.grid.coord(lo) - 0.5 * h, u.grid.coord(hi) + 0.5 * h, false};
}

} // namespace l1pde
