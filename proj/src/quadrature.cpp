#include "l1pde/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace l1pde {

namespace {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Legendre polynomial value and derivative via the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

GaussRule make_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, then Newton
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const auto [p, dp] = legendre(n, x);
        (void)p;
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& rule7() {
    static const GaussRule r = make_rule(7);
    return r;
}
const GaussRule& rule15() {
    static const GaussRule r = make_rule(15);
    return r;
}

double apply(const GaussRule& r, const std::function<double(double)>& f, double a,
             double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

struct Worker {
    const std::function<double(double)>& f;
    double tol;
    int max_depth;
    long evals = 0;
    double err_acc = 0.0;
    bool ok = true;

    double recurse(double a, double b, double coarse, int depth, double local_tol) {
        const double fine = apply(rule15(), f, a, b);
        evals += 15;
        const double err = std::abs(fine - coarse);
        if (err <= local_tol || depth >= max_depth) {
            if (err > local_tol) ok = false;
            err_acc += err;
            return fine;
        }
        const double mid = 0.5 * (a + b);
        const double cl = apply(rule7(), f, a, mid);
        const double cr = apply(rule7(), f, mid, b);
        evals += 14;
        return recurse(a, mid, cl, depth + 1, 0.5 * local_tol) +
               recurse(mid, b, cr, depth + 1, 0.5 * local_tol);
    }
};

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_depth) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    Worker w{f, abs_tol, max_depth};
    const double coarse = apply(rule7(), f, a, b);
    w.evals += 7;
    res.value = w.recurse(a, b, coarse, 0, abs_tol);
    res.abs_error = w.err_acc;
    res.evaluations = w.evals;
    res.converged = w.ok;
    return res;
}

} // namespace l1pde
