#pragma once

#include <functional>

namespace l1pde {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/** Adaptive 1D quadrature on [a, b]: Gauss-Legendre 7/15 pair per interval,
 *  bisecting until the embedded error estimate meets abs_tol. Nodes are
 *  computed once by Newton iteration on the Legendre polynomials. */
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-10, int max_depth = 48);

} // namespace l1pde
