#include <algorithm>
#include <cmath>

#include "l1pde/applications.hpp"
#include "l1pde/errors.hpp"
#include "recorder.hpp"

namespace l1pde {

SignumGordonResult run_signum_gordon(const Field& g1, const Field& g2,
                                     const SignumGordonOptions& opt) {
    if (g1.grid != g2.grid) throw ConfigError("signum-gordon: grids differ");
    check_wave_cfl(g1.grid, opt.tau);
    if (!(opt.t_end > 0.0)) throw ConfigError("signum-gordon: t_end must be positive");

    std::vector<double> snap_times = opt.snapshot_times;
    std::sort(snap_times.begin(), snap_times.end());
    std::size_t next_snap = 0;

    SignumGordonResult res;
    HeatRunOptions dummy; // recorder only needs stride/oracle fields
    detail::TraceRecorder rec(res.trace, dummy);

    Field u_prev = g1;
    Field u = leapfrog_sg_first_step(g1, g2, opt.tau);
    Field next(g1.grid);

    rec.record(0.0, u_prev);
    while (next_snap < snap_times.size() && snap_times[next_snap] <= 0.0) {
        res.snapshots.emplace_back(0.0, u_prev);
        ++next_snap;
    }

    const long nsteps = std::lround(std::ceil(opt.t_end / opt.tau - 1e-9));
    for (long s = 1; s <= nsteps; ++s) {
        const double t = s * opt.tau;
        if (s % opt.trace_stride == 0 || s == nsteps) rec.record(t, u);
        while (next_snap < snap_times.size() && snap_times[next_snap] <= t + 1e-12) {
            res.snapshots.emplace_back(t, u);
            ++next_snap;
        }
        if (s == nsteps) break;
        leapfrog_sg_step_into(u, u_prev, opt.tau, next);
        std::swap(u_prev.values, u.values);
        std::swap(u.values, next.values);
    }
    res.steps = nsteps;
    res.u_final = std::move(u);
    res.u_prev = std::move(u_prev);
    return res;
}

} // namespace l1pde
