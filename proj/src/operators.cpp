#include "l1pde/operators.hpp"

#include <cmath>
#include <numbers>

#include "l1pde/errors.hpp"

namespace l1pde {

Field shrink(const Field& v, double sigma) {
    Field out(v.grid);
    shrink_into(v, sigma, out);
    return out;
}

void shrink_into(const Field& v, double sigma, Field& out) {
    if (sigma < 0.0) throw ConfigError("shrink threshold must be nonnegative");
    out.grid = v.grid;
    out.values.resize(v.values.size());
    const std::size_t m = v.values.size();
    for (std::size_t k = 0; k < m; ++k) out.values[k] = soft_threshold(v.values[k], sigma);
}

double subgradient_select(double u, double f, double gamma) {
    if (!(gamma > 0.0)) throw ConfigError("subgradient_select requires gamma > 0");
    if (u != 0.0) return u > 0.0 ? 1.0 : -1.0;
    const double q = f / gamma;
    if (q > 1.0) return 1.0;
    if (q < -1.0) return -1.0;
    return q;
}

Field laplacian_apply(const Field& u) {
    Field out(u.grid);
    laplacian_apply_into(u, out);
    return out;
}

void laplacian_apply_into(const Field& u, Field& out) {
    const int n = u.grid.n;
    if (n < 4) throw ConfigError("laplacian needs n >= 4");
    out.grid = u.grid;
    out.values.resize(u.values.size());
    const double ih2 = 1.0 / (u.grid.spacing() * u.grid.spacing());
    const double* s = u.values.data();
    double* d = out.values.data();
    if (u.grid.dim == 1) {
        d[0] = (s[n - 1] - 2.0 * s[0] + s[1]) * ih2;
        for (int i = 1; i < n - 1; ++i) d[i] = (s[i - 1] - 2.0 * s[i] + s[i + 1]) * ih2;
        d[n - 1] = (s[n - 2] - 2.0 * s[n - 1] + s[0]) * ih2;
    } else {
        for (int i = 0; i < n; ++i) {
            const int im = (i == 0) ? n - 1 : i - 1;
            const int ip = (i + 1 == n) ? 0 : i + 1;
            const double* row = s + std::size_t(i) * n;
            const double* up = s + std::size_t(im) * n;
            const double* dn = s + std::size_t(ip) * n;
            double* o = d + std::size_t(i) * n;
            for (int j = 0; j < n; ++j) {
                const int jm = (j == 0) ? n - 1 : j - 1;
                const int jp = (j + 1 == n) ? 0 : j + 1;
                o[j] = (up[j] + dn[j] + row[jm] + row[jp] - 4.0 * row[j]) * ih2;
            }
        }
    }
}

LaplacianSymbol::LaplacianSymbol(const Grid& g) : dim_(g.dim), lambda_(g.n) {
    const double h = g.spacing();
    for (int k = 0; k < g.n; ++k)
        lambda_[k] = 2.0 / (h * h) * (1.0 - std::cos(2.0 * std::numbers::pi * k / g.n));
}

Field resolvent_inverse(const Field& z, double tau) {
    Field out(z.grid);
    resolvent_inverse_into(z, tau, out);
    return out;
}

} // namespace l1pde
