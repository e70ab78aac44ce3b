#include "l1pde/schemes.hpp"

#include <cmath>

#include "l1pde/errors.hpp"

namespace l1pde {

namespace {
// allow for rounding when tau is computed as h^2/4 in floating point
constexpr double kCflSlack = 1.0 + 1e-12;
} // namespace

void check_imex_cfl(const Grid& g, double tau) {
    const double h = g.spacing();
    const double bound = h * h / 4.0;
    if (!(tau > 0.0) || tau > bound * kCflSlack)
        throw ConfigError("IMEX time step violates tau <= h^2/4 = " + std::to_string(bound));
}

void check_wave_cfl(const Grid& g, double tau) {
    const double bound = g.dim == 1 ? g.spacing() : g.spacing() / std::sqrt(2.0);
    if (!(tau > 0.0) || tau > bound * kCflSlack)
        throw ConfigError("wave time step violates tau <= " + std::to_string(bound));
}

Field imex_step(const Field& u, const Field& f, const SolverConfig& cfg) {
    check_imex_cfl(u.grid, cfg.tau);
    if (f.grid != u.grid) throw ConfigError("imex_step: grids of u and f differ");
    Field out(u.grid);
    imex_step_into(u, f, cfg.tau, cfg.gamma, out);
    return out;
}

void imex_step_into(const Field& u, const Field& f, double tau, double gamma, Field& out) {
    laplacian_apply_into(u, out);
    const std::size_t m = u.values.size();
    const double thr = tau * gamma;
    for (std::size_t k = 0; k < m; ++k) {
        const double z = u.values[k] + tau * out.values[k] + tau * f.values[k];
        out.values[k] = soft_threshold(z, thr);
    }
}

DrState dr_step(const DrState& state, const Field& f, const SolverConfig& cfg) {
    if (!(cfg.tau > 0.0)) throw ConfigError("dr_step requires tau > 0");
    DrState next = state;
    Field scratch(state.u.grid);
    dr_step_inplace(next, f, cfg.tau, cfg.gamma, scratch);
    return next;
}

void dr_step_inplace(DrState& state, const Field& f, double tau, double gamma,
                     Field& scratch) {
    const std::size_t m = state.u_tilde.values.size();
    shrink_into(state.u_tilde, tau * gamma, state.u);
    // scratch = 2 u_{n+1} - ut_n + tau f, then apply the resolvent
    scratch.grid = state.u.grid;
    scratch.values.resize(m);
    for (std::size_t k = 0; k < m; ++k)
        scratch.values[k] =
            2.0 * state.u.values[k] - state.u_tilde.values[k] + tau * f.values[k];
    resolvent_inverse_into(scratch, tau, scratch);
    for (std::size_t k = 0; k < m; ++k)
        state.u_tilde.values[k] += scratch.values[k] - state.u.values[k];
}

StationaryResult dr_solve_stationary(const Field& f, const SolverConfig& cfg,
                                     const Field& u0) {
    if (!(cfg.stationary_tol > 0.0))
        throw ConfigError("stationary tolerance must be positive");
    if (f.grid != u0.grid) throw ConfigError("dr_solve_stationary: grid mismatch");

    DrState state{u0, u0};
    Field prev = u0;
    Field scratch(f.grid);
    StationaryResult res;
    for (long it = 1; it <= cfg.max_iters; ++it) {
        dr_step_inplace(state, f, cfg.tau, cfg.gamma, scratch);
        double diff = 0.0;
        for (std::size_t k = 0; k < prev.values.size(); ++k)
            diff = std::max(diff, std::abs(state.u.values[k] - prev.values[k]));
        res.iterations = it;
        res.residual = diff;
        // the first iterate of a cold start is always the shrink of u0 itself,
        // so the successive difference is only meaningful from iteration 2 on
        if (it >= 2 && diff <= cfg.stationary_tol) {
            res.converged = true;
            break;
        }
        prev.values = state.u.values;
    }
    res.u = std::move(state.u);
    return res;
}

Field leapfrog_sg_step(const Field& u_now, const Field& u_prev, double tau) {
    check_wave_cfl(u_now.grid, tau);
    if (u_prev.grid != u_now.grid) throw ConfigError("leapfrog: grid mismatch");
    Field out(u_now.grid);
    leapfrog_sg_step_into(u_now, u_prev, tau, out);
    return out;
}

void leapfrog_sg_step_into(const Field& u_now, const Field& u_prev, double tau,
                           Field& out) {
    laplacian_apply_into(u_now, out);
    const double tau2 = tau * tau;
    const std::size_t m = u_now.values.size();
    for (std::size_t k = 0; k < m; ++k) {
        const double z =
            2.0 * u_now.values[k] - u_prev.values[k] + tau2 * out.values[k];
        out.values[k] = soft_threshold(z, tau2);
    }
}

Field leapfrog_sg_first_step(const Field& g1, const Field& g2, double tau) {
    check_wave_cfl(g1.grid, tau);
    if (g2.grid != g1.grid) throw ConfigError("leapfrog: grid mismatch");
    Field out = laplacian_apply(g1);
    const double half_tau2 = 0.5 * tau * tau;
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        const double z = g1.values[k] + tau * g2.values[k] + half_tau2 * out.values[k];
        out.values[k] = soft_threshold(z, half_tau2);
    }
    return out;
}

std::vector<double> graph_imex_step(const std::vector<double>& u, const Graph& g,
                                    double tau, double gamma) {
    if (!(tau > 0.0) || tau > 1.0)
        throw ConfigError("graph step requires 0 < tau <= 1");
    std::vector<double> lap = graph_laplacian_apply(g, u);
    const double thr = tau * gamma;
    for (std::size_t k = 0; k < u.size(); ++k)
        lap[k] = soft_threshold(u[k] - tau * lap[k], thr);
    return lap;
}

} // namespace l1pde
