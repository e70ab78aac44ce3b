#pragma once

#include <cmath>
#include <functional>

#include "l1pde/grid.hpp"
#include "l1pde/quadrature.hpp"

namespace l1pde {

struct TravelingWaveParams {
    double gamma;
    double sigma; // wave speed
};

/** One-sided traveling wave of u_t - u_xx = -gamma p(u):
 *  u = (g/s)(x - s t) + (g/s^2)(exp(-s (x - s t)) - 1) for x >= s t, else 0. */
double traveling_wave(double x, double t, const TravelingWaveParams& p);

/// Support radius a = sqrt(gamma^-2 - 1) of the exact stationary solution.
double exact_elliptic_radius(double gamma);

/** Exact stationary solution for f = (1 + x^2)^{-3/2} and gamma in (0, 1]:
 *  u = -(1+x^2)^{1/2} + gamma x^2 / 2 + (gamma + 1/gamma)/2 on |x| <= a, else 0. */
double exact_elliptic(double x, double gamma);

/// The forcing of the exact stationary solution.
inline double exact_elliptic_forcing(double x) {
    const double r = 1.0 + x * x;
    return 1.0 / (r * std::sqrt(r));
}

/** Green's superposition for the 1D stationary equation on a one-signed
 *  positive support [lo, hi]: u(x) = integral of (-|x-y|/2)(f(y) - gamma) dy.
 *  Independent quadrature oracle for exact_elliptic. */
QuadratureResult greens_elliptic_eval(double x, const std::function<double(double)>& f,
                                      double gamma, double support_lo, double support_hi,
                                      double abs_tol = 1e-10);

/** Stationary support bound (alpha gamma)^{-1} * sum (|f_i| - beta gamma)^+ h^d,
 *  for nonnegative alpha, beta with alpha + beta = 1, alpha > 0. */
double support_bound_elliptic(const Field& f, double gamma, double alpha, double beta);

/** Space-time support bound for time-constant forcing over [0, T]:
 *  (alpha gamma)^{-1} (||g||_1 + T * sum (|f_i| - beta gamma)^+ h^d). */
double support_bound_parabolic(const Field& g, const Field& f, double gamma, double alpha,
                               double beta, double T);

struct FreeBoundaryQuadReport {
    double x_upper;             // outer integral truncated at a1 + x_upper
    bool inner_moment_analytic; // y level collapsed to a closed form
    double abs_error_estimate;  // accumulated adaptive estimate at the root
    long evaluations;
};

struct FreeBoundaryPrediction {
    double a0 = 0.0; // forcing-specific offset, f(a0) = gamma
    double a1 = 0.0; // universal sqrt(t) coefficient
    FreeBoundaryQuadReport report{};
};

/** Rescaled exterior mass of the free-boundary ansatz a(t) = a0 + a1 sqrt(t):
 *  a triple integral of the first heat-kernel moment, with the innermost level
 *  in closed form (erf/exp). Negative at a1 = 0, positive for large a1. */
double free_boundary_mass_deficit(double a1, FreeBoundaryQuadReport* report = nullptr);

/** Root of the rescaled mass by bracketing + bisection on [0, 4], tolerance 1e-6
 *  on the argument. Throws ConfigError if the bracket shows no sign change. */
FreeBoundaryPrediction free_boundary_a1(double bisect_tol = 1e-6);

/// a0 for the forcing A exp(-r x^2): the positive root of f(a0) = gamma.
double gaussian_forcing_boundary(double amplitude, double rate, double gamma);

} // namespace l1pde
