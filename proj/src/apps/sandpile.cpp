#include <algorithm>
#include <cmath>

#include "l1pde/applications.hpp"
#include "l1pde/errors.hpp"

namespace l1pde {

Field SandpileProblem::forcing() const {
    if (grid.dim != 2) throw ConfigError("sandpile: 2D grid required");
    Field f(grid);
    for (const auto& r : regions) {
        if (r.alpha < 0.0) throw ConfigError("sandpile: region coefficients must be >= 0");
        if (r.mask.size() != grid.size()) throw ConfigError("sandpile: mask size mismatch");
        for (std::size_t k = 0; k < r.mask.size(); ++k)
            if (r.mask[k]) f.values[k] += r.alpha;
    }
    return f;
}

double SandpileProblem::injected_mass() const {
    double mass = 0.0;
    for (const auto& r : regions) mass += r.alpha * mask_measure(grid, r.mask);
    return mass;
}

SandpileSolveResult sandpile_solve(const SandpileProblem& p, const SolverConfig& cfg,
                                   const std::vector<long>& snapshot_iters) {
    SolverConfig solve_cfg = cfg;
    solve_cfg.gamma = 1.0; // the sandpile functional carries |u| with unit weight
    const Field f = p.forcing();

    SandpileSolveResult res;
    if (snapshot_iters.empty()) {
        res.info = dr_solve_stationary(f, solve_cfg, Field(p.grid));
    } else {
        // re-implement the iteration loop to capture intermediate iterates
        std::vector<long> iters = snapshot_iters;
        std::sort(iters.begin(), iters.end());
        DrState state{Field(p.grid), Field(p.grid)};
        Field prev(p.grid), scratch(p.grid);
        std::size_t next = 0;
        for (long it = 1; it <= solve_cfg.max_iters; ++it) {
            dr_step_inplace(state, f, solve_cfg.tau, solve_cfg.gamma, scratch);
            while (next < iters.size() && iters[next] <= it) {
                res.iter_snapshots.emplace_back(it, state.u);
                ++next;
            }
            double diff = 0.0;
            for (std::size_t k = 0; k < prev.values.size(); ++k)
                diff = std::max(diff, std::abs(state.u.values[k] - prev.values[k]));
            res.info.iterations = it;
            res.info.residual = diff;
            if (diff <= solve_cfg.stationary_tol) {
                res.info.converged = true;
                break;
            }
            prev.values = state.u.values;
        }
        res.info.u = std::move(state.u);
    }

    res.u = res.info.u;
    res.supp = support(res.u);
    const double mass = p.injected_mass();
    res.mass_identity_rel_error =
        mass > 0.0 ? std::abs(res.supp.measure - mass) / mass : res.supp.measure;
    return res;
}

ToppleResult sandpile_topple(const SandpileProblem& p, double eps_stop_rel,
                             long max_sweeps) {
    if (!(eps_stop_rel > 0.0)) throw ConfigError("toppling: eps_stop must be positive");
    const Field f = p.forcing();
    const int n = p.grid.n;
    const std::size_t m = f.values.size();

    ToppleResult res;
    res.mass = f.values;
    std::vector<double> excess(m, 0.0);

    const double total0 = stable_sum(res.mass.data(), m);
    const double eps_stop = eps_stop_rel * std::max(total0, 1e-300);

    for (long sweep = 1; sweep <= max_sweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double e = res.mass[k] - 1.0;
            excess[k] = e > 0.0 ? e : 0.0;
            worst = std::max(worst, excess[k]);
        }
        res.sweeps = sweep;
        res.max_excess = worst;
        if (worst <= eps_stop) {
            res.converged = true;
            res.sweeps = sweep - 1;
            break;
        }
        // synchronous redistribution: keep capacity, gain quarters from neighbors
        for (int i = 0; i < n; ++i) {
            const int im = (i == 0) ? n - 1 : i - 1;
            const int ip = (i + 1 == n) ? 0 : i + 1;
            const std::size_t row = std::size_t(i) * n;
            const std::size_t rup = std::size_t(im) * n;
            const std::size_t rdn = std::size_t(ip) * n;
            for (int j = 0; j < n; ++j) {
                const int jm = (j == 0) ? n - 1 : j - 1;
                const int jp = (j + 1 == n) ? 0 : j + 1;
                res.mass[row + j] = res.mass[row + j] - excess[row + j] +
                                    0.25 * (excess[rup + j] + excess[rdn + j] +
                                            excess[row + jm] + excess[row + jp]);
            }
        }
        const double total = stable_sum(res.mass.data(), m);
        res.mass_drift_rel = std::max(res.mass_drift_rel,
                                      std::abs(total - total0) / std::max(total0, 1e-300));
    }

    // occupied cells reached (numerical) capacity
    constexpr double kOccupied = 1.0 - 1e-6;
    res.occupied.mask.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        res.occupied.mask[k] = (res.mass[k] >= kOccupied);
        res.occupied.count += res.occupied.mask[k];
    }
    res.occupied.measure = double(res.occupied.count) * p.grid.cell_measure();
    return res;
}

double jaccard(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    if (a.size() != b.size()) throw ConfigError("jaccard: mask sizes differ");
    std::size_t inter = 0, uni = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        inter += (a[k] && b[k]);
        uni += (a[k] || b[k]);
    }
    return uni == 0 ? 1.0 : double(inter) / double(uni);
}

} // namespace l1pde
