#pragma once

#include "l1pde/graph.hpp"
#include "l1pde/grid.hpp"
#include "l1pde/operators.hpp"

namespace l1pde {

enum class Scheme { imex, dr };

struct SolverConfig {
    double tau = 0.0;
    double gamma = 0.0;
    double t_end = 0.0;
    Scheme scheme = Scheme::imex;
    double stationary_tol = 1e-10;
    long max_iters = 200000;
};

/// Throws ConfigError unless tau <= h^2/4 (the explicit-diffusion stability bound).
void check_imex_cfl(const Grid& g, double tau);

/// Throws ConfigError unless tau <= h (1D) or h/sqrt(2) (2D), the wave CFL.
void check_wave_cfl(const Grid& g, double tau);

/** One semi-implicit (proximal gradient) step:
 *  u^{n+1} = shrink(u + tau*Lap(u) + tau*f, tau*gamma). */
Field imex_step(const Field& u, const Field& f, const SolverConfig& cfg);
void imex_step_into(const Field& u, const Field& f, double tau, double gamma, Field& out);

/** Douglas-Rachford iterate pair. After every step u = shrink(u_tilde_prev, tau*gamma). */
struct DrState {
    Field u;
    Field u_tilde;
};

/** One Douglas-Rachford step for u_t - Lap(u) = f - gamma p(u):
 *    u_{n+1}      = shrink(ut_n, tau*gamma)
 *    ut_{n+1}     = ut_n + (I - tau*Lap)^{-1}(2 u_{n+1} - ut_n + tau*f) - u_{n+1}
 *  Unconditionally stable; the iterates converge to the stationary equation. */
DrState dr_step(const DrState& state, const Field& f, const SolverConfig& cfg);
void dr_step_inplace(DrState& state, const Field& f, double tau, double gamma,
                     Field& scratch);

struct StationaryResult {
    Field u;
    long iterations = 0;
    double residual = 0.0; // last successive-iterate Linf difference
    bool converged = false;
};

/** Iterates dr_step from u0 until the successive-iterate Linf difference falls
 *  below cfg.stationary_tol or cfg.max_iters is reached. */
StationaryResult dr_solve_stationary(const Field& f, const SolverConfig& cfg,
                                     const Field& u0);

/** Leapfrog-shrink step for u_tt - Lap(u) = -sign(u):
 *  u^{n+1} = shrink(2 u^n - u^{n-1} + tau^2 Lap(u^n), tau^2). */
Field leapfrog_sg_step(const Field& u_now, const Field& u_prev, double tau);
void leapfrog_sg_step_into(const Field& u_now, const Field& u_prev, double tau,
                           Field& out);

/** Taylor start for the leapfrog: shrink(g1 + tau*g2 + tau^2/2 * Lap(g1), tau^2/2). */
Field leapfrog_sg_first_step(const Field& g1, const Field& g2, double tau);

/** Graph diffusion step: shrink(u - tau*(I - D^{-1/2} A D^{-1/2}) u, tau*gamma).
 *  Stable for tau <= 1 (normalized Laplacian spectrum lies in [0, 2]). */
std::vector<double> graph_imex_step(const std::vector<double>& u, const Graph& g,
                                    double tau, double gamma);

} // namespace l1pde
