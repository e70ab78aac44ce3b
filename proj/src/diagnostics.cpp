#include "l1pde/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "l1pde/errors.hpp"

namespace l1pde {

void write_trace_csv(const DiagnosticsTrace& t, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw IoError("cannot open for writing: " + path);
    const bool have_ext = !t.support_left.empty();
    const bool have_err = !t.err_l1.empty();
    std::fprintf(fp, "time,l1,l2,linf,tv,support_measure,energy,step_diff_l1,step_diff_l2");
    if (have_ext) std::fprintf(fp, ",support_left,support_right");
    if (have_err) std::fprintf(fp, ",err_l1,err_l2,err_linf");
    std::fputc('\n', fp);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        std::fprintf(fp, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                     t.times[i], t.l1[i], t.l2[i], t.linf[i], t.tv[i],
                     t.support_measure[i], t.energy[i], t.step_diff_l1[i],
                     t.step_diff_l2[i]);
        if (have_ext) std::fprintf(fp, ",%.17g,%.17g", t.support_left[i], t.support_right[i]);
        if (have_err)
            std::fprintf(fp, ",%.17g,%.17g,%.17g", t.err_l1[i], t.err_l2[i], t.err_linf[i]);
        std::fputc('\n', fp);
    }
    if (std::fclose(fp) != 0) throw IoError("write failed: " + path);
}

double error_norm(const Field& u, const std::function<double(double, double)>& oracle,
                  Norm q) {
    Field diff(u.grid);
    const int n = u.grid.n;
    if (u.grid.dim == 1) {
        for (int i = 0; i < n; ++i)
            diff.values[i] = u.values[i] - oracle(u.grid.coord(i), 0.0);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                diff.at(i, j) = u.at(i, j) - oracle(u.grid.coord(i), u.grid.coord(j));
    }
    return norm(diff, q);
}

namespace {

// least squares for y ~ c0 + c1 * basis(t) via the 2x2 normal equations
FitResult fit_two_parameter(const std::vector<double>& x, const std::vector<double>& y,
                            const std::function<double(double)>& basis) {
    const std::size_t m = x.size();
    if (m < 3 || y.size() != m)
        throw ConfigError("fit needs at least 3 samples of matching length");
    double s1 = double(m), sb = 0, sbb = 0, sy = 0, sby = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double b = basis(x[i]);
        sb += b;
        sbb += b * b;
        sy += y[i];
        sby += b * y[i];
    }
    const double det = s1 * sbb - sb * sb;
    const double trace = s1 + sbb;
    if (!(std::abs(det) > 1e-14 * trace * trace))
        throw ConfigError("degenerate design matrix in least squares fit");
    FitResult r;
    r.coefficients = {(sbb * sy - sb * sby) / det, (s1 * sby - sb * sy) / det};
    // condition of the normal equations via eigenvalue ratio
    const double disc = std::sqrt(trace * trace / 4.0 - det);
    r.condition = (trace / 2.0 + disc) / std::max(trace / 2.0 - disc, 1e-300);
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = y[i] - r.coefficients[0] - r.coefficients[1] * basis(x[i]);
        rss += e * e;
    }
    r.residual = std::sqrt(rss);
    return r;
}

} // namespace

FitResult convergence_rate(const std::vector<double>& hs,
                           const std::vector<double>& errors) {
    if (hs.size() != errors.size() || hs.size() < 3)
        throw ConfigError("convergence fit needs at least 3 (h, error) pairs");
    std::vector<double> lh(hs.size()), le(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (!(hs[i] > 0.0) || !(errors[i] > 0.0))
            throw ConfigError("convergence fit needs positive h and errors");
        lh[i] = std::log(hs[i]);
        le[i] = std::log(errors[i]);
    }
    return fit_two_parameter(lh, le, [](double v) { return v; });
}

FitResult fit_sqrt_boundary(const std::vector<double>& times,
                            const std::vector<double>& a_values) {
    for (double t : times)
        if (!(t > 0.0)) throw ConfigError("sqrt fit needs positive times");
    return fit_two_parameter(times, a_values, [](double t) { return std::sqrt(t); });
}

FitResult fit_power_boundary(const std::vector<double>& times,
                             const std::vector<double>& a_values) {
    // golden-section search over the exponent, linear fit inside
    auto rss = [&](double beta) {
        return fit_two_parameter(times, a_values, [beta](double t) {
                   return std::pow(t, beta);
               }).residual;
    };
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.2, hi = 0.9;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = rss(x1), f2 = rss(x2);
    while (hi - lo > 1e-8) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = rss(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = rss(x2);
        }
    }
    const double beta = 0.5 * (lo + hi);
    FitResult inner = fit_two_parameter(times, a_values,
                                        [beta](double t) { return std::pow(t, beta); });
    FitResult r;
    r.coefficients = {inner.coefficients[0], inner.coefficients[1], beta};
    r.residual = inner.residual;
    r.condition = inner.condition;
    return r;
}

MonotonicityReport monotonicity_check(const std::vector<double>& series,
                                      double tolerance) {
    MonotonicityReport rep;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        const double excess = series[i + 1] - series[i] - tolerance;
        if (excess > 0.0) {
            if (rep.pass) {
                rep.pass = false;
                rep.first_violation = long(i + 1);
            }
            rep.worst_excess = std::max(rep.worst_excess, excess);
        }
    }
    return rep;
}

EntropyReport entropy_check(const DiagnosticsTrace& trace, double gamma, double tau) {
    EntropyReport rep;
    const std::size_t m = trace.rows();
    if (m < 2 || trace.energy.size() != m || trace.l1.size() != m ||
        trace.step_diff_l1.size() != m || trace.step_diff_l2.size() != m)
        throw ConfigError("entropy check needs energy, l1 and step-difference columns");

    constexpr double c_slack = 10.0;
    double variation = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        const double d2 = trace.step_diff_l2[i], d1 = trace.step_diff_l1[i];
        variation = std::max(variation, d2 * d2 / (tau * tau) + gamma * d1 / tau);
    }
    rep.slack = c_slack * tau * variation;
    for (std::size_t i = 1; i < m; ++i) {
        const double lhs = (trace.energy[i] - trace.energy[i - 1]) / tau;
        const double margin = lhs + gamma * trace.l1[i] - rep.slack;
        if (margin > rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_index = long(i);
            rep.pass = false;
        }
    }
    return rep;
}

} // namespace l1pde
