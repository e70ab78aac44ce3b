#include "l1pde/analytic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "l1pde/errors.hpp"

namespace l1pde {

double traveling_wave(double x, double t, const TravelingWaveParams& p) {
    if (!(p.gamma > 0.0) || !(p.sigma > 0.0))
        throw ConfigError("traveling wave requires gamma > 0 and sigma > 0");
    const double s = x - p.sigma * t;
    if (s <= 0.0) return 0.0;
    return p.gamma / p.sigma * s +
           p.gamma / (p.sigma * p.sigma) * (std::exp(-p.sigma * s) - 1.0);
}

double exact_elliptic_radius(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw ConfigError("exact stationary solution needs gamma in (0, 1]");
    return std::sqrt(1.0 / (gamma * gamma) - 1.0);
}

double exact_elliptic(double x, double gamma) {
    const double a = exact_elliptic_radius(gamma);
    if (std::abs(x) > a) return 0.0;
    const double c = 0.5 * (gamma + 1.0 / gamma);
    const double u = -std::sqrt(1.0 + x * x) + 0.5 * gamma * x * x + c;
    // the closed form is nonnegative; rounding can leave -1e-16 at the touchdown
    return u < 0.0 ? 0.0 : u;
}

QuadratureResult greens_elliptic_eval(double x, const std::function<double(double)>& f,
                                      double gamma, double support_lo, double support_hi,
                                      double abs_tol) {
    auto integrand = [&](double y) { return -0.5 * std::abs(x - y) * (f(y) - gamma); };
    // split at the kernel kink when it falls inside the support
    if (x > support_lo && x < support_hi) {
        QuadratureResult left = integrate(integrand, support_lo, x, 0.5 * abs_tol);
        QuadratureResult right = integrate(integrand, x, support_hi, 0.5 * abs_tol);
        return {left.value + right.value, left.abs_error + right.abs_error,
                left.evaluations + right.evaluations, left.converged && right.converged};
    }
    return integrate(integrand, support_lo, support_hi, abs_tol);
}

namespace {

void check_alpha_beta(double gamma, double alpha, double beta) {
    if (!(gamma > 0.0)) throw ConfigError("support bound requires gamma > 0");
    if (!(alpha > 0.0) || beta < 0.0 || std::abs(alpha + beta - 1.0) > 1e-12)
        throw ConfigError("support bound requires alpha > 0, beta >= 0, alpha + beta = 1");
}

double positive_part_integral(const Field& f, double level) {
    std::vector<double> terms(f.values.size());
    for (std::size_t k = 0; k < terms.size(); ++k)
        terms[k] = std::max(std::abs(f.values[k]) - level, 0.0);
    return f.grid.cell_measure() * stable_sum(terms.data(), terms.size());
}

} // namespace

double support_bound_elliptic(const Field& f, double gamma, double alpha, double beta) {
    check_alpha_beta(gamma, alpha, beta);
    return positive_part_integral(f, beta * gamma) / (alpha * gamma);
}

double support_bound_parabolic(const Field& g, const Field& f, double gamma, double alpha,
                               double beta, double T) {
    check_alpha_beta(gamma, alpha, beta);
    if (!(T > 0.0)) throw ConfigError("parabolic bound requires T > 0");
    return (norm(g, Norm::l1) + T * positive_part_integral(f, beta * gamma)) /
           (alpha * gamma);
}

namespace {

// first moment of the heat kernel: integral over y < Y of y G(x - y, T) dy
double truncated_first_moment(double x, double Y, double T) {
    const double v = 2.0 * T; // variance of the kernel as a density in y
    const double sv = std::sqrt(v);
    const double w = (Y - x) / sv;
    const double phi = std::exp(-0.5 * w * w) / std::sqrt(2.0 * std::numbers::pi);
    const double Phi = 0.5 * std::erfc(-w / std::numbers::sqrt2);
    return x * Phi - sv * phi;
}

constexpr double kOuterSpan = 16.0; // x integral truncated at a1 + this (kernel < 1e-27)

} // namespace

double free_boundary_mass_deficit(double a1, FreeBoundaryQuadReport* report) {
    long evals = 0;
    double err = 0.0;
    auto outer = [&](double x1) {
        QuadratureResult inner = integrate(
            [&](double s1) {
                return truncated_first_moment(x1, a1 * std::sqrt(s1), 1.0 - s1);
            },
            0.0, 1.0, 1e-12);
        evals += inner.evaluations;
        err += inner.abs_error;
        return inner.value;
    };
    QuadratureResult res = integrate(outer, a1, a1 + kOuterSpan, 1e-10);
    if (report) {
        report->x_upper = kOuterSpan;
        report->inner_moment_analytic = true;
        report->abs_error_estimate = res.abs_error + err;
        report->evaluations = res.evaluations + evals;
    }
    return res.value;
}

FreeBoundaryPrediction free_boundary_a1(double bisect_tol) {
    double lo = 0.0, hi = 4.0;
    double mlo = free_boundary_mass_deficit(lo);
    double mhi = free_boundary_mass_deficit(hi);
    if (!(mlo < 0.0) || !(mhi > 0.0)) {
        std::ostringstream msg;
        msg << "free boundary bracket has no sign change: m(" << lo << ")=" << mlo
            << ", m(" << hi << ")=" << mhi;
        throw ConfigError(msg.str());
    }
    FreeBoundaryPrediction pred;
    while (hi - lo > bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        const double m = free_boundary_mass_deficit(mid, &pred.report);
        (m < 0.0 ? lo : hi) = mid;
    }
    pred.a1 = 0.5 * (lo + hi);
    free_boundary_mass_deficit(pred.a1, &pred.report);
    return pred;
}

double gaussian_forcing_boundary(double amplitude, double rate, double gamma) {
    if (!(amplitude > gamma) || !(rate > 0.0) || !(gamma > 0.0))
        throw ConfigError("gaussian boundary needs amplitude > gamma > 0 and rate > 0");
    return std::sqrt(std::log(amplitude / gamma) / rate);
}

} // namespace l1pde
