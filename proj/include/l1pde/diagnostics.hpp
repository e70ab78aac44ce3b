#pragma once

#include <functional>
#include <string>
#include <vector>

#include "l1pde/grid.hpp"

namespace l1pde {

/** Per-step time series recorded by the run drivers. All columns share the
 *  length of `times`; err_* are filled only when a reference oracle is attached,
 *  support_left/right only for 1D runs. */
struct DiagnosticsTrace {
    std::vector<double> times;
    std::vector<double> l1, l2, linf, tv;
    std::vector<double> support_measure, energy;
    std::vector<double> step_diff_l1, step_diff_l2; // between consecutive recorded states
    std::vector<double> support_left, support_right;
    std::vector<double> err_l1, err_l2, err_linf;

    std::size_t rows() const { return times.size(); }
};

void write_trace_csv(const DiagnosticsTrace& t, const std::string& path);

struct FitResult {
    std::vector<double> coefficients;
    double residual = 0.0;  // l2 norm of the fit residual
    double condition = 0.0; // condition indicator of the normal equations
};

/// Discrete Lq norm of (u - oracle sampled on the grid). oracle takes (x, y); y = 0 in 1D.
double error_norm(const Field& u, const std::function<double(double, double)>& oracle,
                  Norm q);

/// Least-squares slope of log(error) against log(h). coefficients = {intercept, slope}.
FitResult convergence_rate(const std::vector<double>& hs,
                           const std::vector<double>& errors);

/// Linear least squares for a(t) = a0 + a1 sqrt(t). coefficients = {a0, a1}.
FitResult fit_sqrt_boundary(const std::vector<double>& times,
                            const std::vector<double>& a_values);

/// Free-exponent fit a(t) = a0 + a1 t^beta. coefficients = {a0, a1, beta}.
FitResult fit_power_boundary(const std::vector<double>& times,
                             const std::vector<double>& a_values);

struct MonotonicityReport {
    bool pass = true;
    long first_violation = -1;
    double worst_excess = 0.0;
};

/// Passes iff series[i+1] <= series[i] + tolerance for all i.
MonotonicityReport monotonicity_check(const std::vector<double>& series, double tolerance);

struct EntropyReport {
    bool pass = true;
    double worst_margin = 0.0; // most positive violation of the inequality
    long worst_index = -1;
    double slack = 0.0;
};

/** Discrete entropy inequality for K(u) = u^2/2 on an IMEX trace with f = 0:
 *  (E_{n+1} - E_n)/tau <= -gamma ||u_{n+1}||_1 + slack, with
 *  slack = C_slack * tau * max step variation (C_slack = 10). Requires a
 *  stride-1 trace with energy, l1 and step-difference columns. */
EntropyReport entropy_check(const DiagnosticsTrace& trace, double gamma, double tau);

} // namespace l1pde
