#include <algorithm>
#include <cmath>

#include "l1pde/applications.hpp"
#include "l1pde/errors.hpp"
#include "recorder.hpp"

namespace l1pde {

namespace {

HeatRunResult run_heat(const Field& f, const Field& g, const HeatRunOptions& opt) {
    if (f.grid != g.grid) throw ConfigError("heat run: grids of f and g differ");
    if (!f.finite() || !g.finite()) throw ConfigError("heat run: non-finite input data");
    const SolverConfig& cfg = opt.solver;
    if (cfg.scheme == Scheme::imex)
        check_imex_cfl(g.grid, cfg.tau);
    else if (!(cfg.tau > 0.0))
        throw ConfigError("heat run: tau must be positive");
    if (!(cfg.t_end > 0.0)) throw ConfigError("heat run: t_end must be positive");
    if (opt.trace_stride < 1) throw ConfigError("heat run: trace stride must be >= 1");

    const long nsteps = std::lround(std::ceil(cfg.t_end / cfg.tau - 1e-9));
    const bool f_zero = std::all_of(f.values.begin(), f.values.end(),
                                    [](double v) { return v == 0.0; });

    std::vector<double> snap_times = opt.snapshot_times;
    std::sort(snap_times.begin(), snap_times.end());
    std::size_t next_snap = 0;

    HeatRunResult res;
    detail::TraceRecorder rec(res.trace, opt);

    Field u = g;
    Field next(u.grid);
    DrState dr_state{g, g};
    Field scratch(u.grid);

    rec.record(0.0, u);
    while (next_snap < snap_times.size() && snap_times[next_snap] <= 0.0) {
        res.snapshots.emplace_back(0.0, u);
        ++next_snap;
    }

    for (long s = 1; s <= nsteps; ++s) {
        const double t = s * cfg.tau;
        if (cfg.scheme == Scheme::imex) {
            imex_step_into(u, f, cfg.tau, cfg.gamma, next);
            std::swap(u.values, next.values);
        } else {
            dr_step_inplace(dr_state, f, cfg.tau, cfg.gamma, scratch);
            u.values = dr_state.u.values;
        }
        if (s % opt.trace_stride == 0 || s == nsteps) rec.record(t, u);
        while (next_snap < snap_times.size() && snap_times[next_snap] <= t + 1e-12) {
            res.snapshots.emplace_back(t, u);
            ++next_snap;
        }
        if (!res.boundary_warning && detail::touches_boundary_margin(u, 5))
            res.boundary_warning = true;
        if (std::isnan(res.extinction_time) && detail::is_zero(u)) {
            res.extinction_time = t;
            if (f_zero) { // zero is invariant from here on
                res.steps = s;
                if (s % opt.trace_stride != 0) rec.record(t, u);
                while (next_snap < snap_times.size()) {
                    res.snapshots.emplace_back(snap_times[next_snap], u);
                    ++next_snap;
                }
                return res;
            }
        }
    }
    res.steps = nsteps;
    return res;
}

} // namespace

HeatRunResult run_heat_1d(const Field& f, const Field& g, const HeatRunOptions& opt) {
    if (g.grid.dim != 1) throw ConfigError("run_heat_1d needs a 1D grid");
    return run_heat(f, g, opt);
}

HeatRunResult run_heat_2d(const Field& f, const Field& g, const HeatRunOptions& opt) {
    if (g.grid.dim != 2) throw ConfigError("run_heat_2d needs a 2D grid");
    return run_heat(f, g, opt);
}

StarDecayResult run_heat_2d_star(double gamma, StarDecayOptions opt) {
    if (opt.solver.scheme != Scheme::dr)
        throw ConfigError("star decay uses the parabolic Douglas-Rachford scheme");
    opt.solver.gamma = gamma;
    StarDecayResult res;
    res.initial = smooth_mask(opt.grid, make_star_mask(opt.grid, opt.shape), opt.amplitude,
                              opt.smooth_width_cells);
    HeatRunOptions ro;
    ro.solver = opt.solver;
    ro.snapshot_times = opt.snapshot_times;
    ro.trace_stride = opt.trace_stride;
    res.run = run_heat_2d(Field(opt.grid), res.initial, ro);
    return res;
}

} // namespace l1pde
