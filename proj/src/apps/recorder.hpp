#pragma once

// Shared per-step trace bookkeeping for the run drivers.

#include <cmath>

#include "l1pde/applications.hpp"

namespace l1pde::detail {

struct TraceRecorder {
    DiagnosticsTrace& trace;
    const HeatRunOptions& opt;
    Field prev_recorded; // state at the last recorded row
    bool first = true;

    TraceRecorder(DiagnosticsTrace& t, const HeatRunOptions& o) : trace(t), opt(o) {}

    void record(double t, const Field& u) {
        trace.times.push_back(t);
        trace.l1.push_back(norm(u, Norm::l1));
        const double l2 = norm(u, Norm::l2);
        trace.l2.push_back(l2);
        trace.linf.push_back(norm(u, Norm::linf));
        trace.tv.push_back(total_variation(u));
        trace.support_measure.push_back(support(u).measure);
        trace.energy.push_back(0.5 * l2 * l2);
        if (first) {
            trace.step_diff_l1.push_back(0.0);
            trace.step_diff_l2.push_back(0.0);
        } else {
            Field d = u;
            for (std::size_t k = 0; k < d.values.size(); ++k)
                d.values[k] -= prev_recorded.values[k];
            trace.step_diff_l1.push_back(norm(d, Norm::l1));
            trace.step_diff_l2.push_back(norm(d, Norm::l2));
        }
        if (u.grid.dim == 1) {
            const SupportExtent ext = support_extent_1d(u);
            trace.support_left.push_back(ext.left);
            trace.support_right.push_back(ext.right);
        }
        if (opt.oracle) record_errors(t, u);
        prev_recorded = u;
        first = false;
    }

    void record_errors(double t, const Field& u) {
        const Grid& g = u.grid;
        double e1 = 0.0, e2 = 0.0, einf = 0.0;
        const double hd = g.cell_measure();
        const int n = g.n;
        auto tally = [&](double x, double y, double val) {
            if (x < opt.error_window_lo || x > opt.error_window_hi) return;
            const double d = std::abs(val - opt.oracle(x, t));
            (void)y;
            e1 += d;
            e2 += d * d;
            einf = std::max(einf, d);
        };
        if (g.dim == 1) {
            for (int i = 0; i < n; ++i) tally(g.coord(i), 0.0, u.values[i]);
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) tally(g.coord(i), g.coord(j), u.at(i, j));
        }
        trace.err_l1.push_back(e1 * hd);
        trace.err_l2.push_back(std::sqrt(e2 * hd));
        trace.err_linf.push_back(einf);
    }
};

inline bool touches_boundary_margin(const Field& u, int margin_cells) {
    const int n = u.grid.n;
    if (u.grid.dim == 1) {
        for (int i = 0; i < margin_cells; ++i)
            if (u.values[i] != 0.0 || u.values[n - 1 - i] != 0.0) return true;
        return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (u.at(i, j) != 0.0 &&
                (i < margin_cells || i >= n - margin_cells || j < margin_cells ||
                 j >= n - margin_cells))
                return true;
    return false;
}

inline bool is_zero(const Field& u) {
    for (double v : u.values)
        if (v != 0.0) return false;
    return true;
}

} // namespace l1pde::detail
