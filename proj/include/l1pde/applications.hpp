#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "l1pde/diagnostics.hpp"
#include "l1pde/graph.hpp"
#include "l1pde/grid.hpp"
#include "l1pde/schemes.hpp"

namespace l1pde {

// ---------------------------------------------------------------- heat runs

struct HeatRunOptions {
    SolverConfig solver;
    std::vector<double> snapshot_times;
    int trace_stride = 1;
    /// Optional exact solution (x, t) -> u used to fill the err_* trace columns.
    std::function<double(double, double)> oracle;
    /// Error norms are restricted to [window_lo, window_hi] when set.
    double error_window_lo = -std::numeric_limits<double>::infinity();
    double error_window_hi = std::numeric_limits<double>::infinity();
};

struct HeatRunResult {
    DiagnosticsTrace trace;
    std::vector<std::pair<double, Field>> snapshots;
    double extinction_time = std::numeric_limits<double>::quiet_NaN();
    bool boundary_warning = false; // support came within 5h of the domain edge
    long steps = 0;
};

/// Time-steps u_t - Lap(u) = f - gamma p(u) from g with the configured scheme.
HeatRunResult run_heat_1d(const Field& f, const Field& g, const HeatRunOptions& opt);

/// Same driver on a 2D grid (used by the star decay study and tests).
HeatRunResult run_heat_2d(const Field& f, const Field& g, const HeatRunOptions& opt);

// ---------------------------------------------------------------- 2D shapes

struct PolarShape {
    int k = 5;        // lobe count
    double r0 = 0.25; // mean radius
    double eps = 0.3; // lobe amplitude, |eps| < 1
    double cx = 0.5, cy = 0.5;
};

std::vector<std::uint8_t> make_star_mask(const Grid& g, const PolarShape& s);
std::vector<std::uint8_t> make_flower_mask(const Grid& g, const PolarShape& s);
std::vector<std::uint8_t> make_rect_mask(const Grid& g, double x0, double y0, double x1,
                                         double y1);
/// Koch-snowflake fill of the given depth, circumradius `scale`.
std::vector<std::uint8_t> make_fractal_mask(const Grid& g, int depth, double scale,
                                            double cx, double cy);
double mask_measure(const Grid& g, const std::vector<std::uint8_t>& mask);

/// amplitude * indicator, mollified by a discrete Gaussian of total width
/// `width_cells` cells (periodic separable convolution).
Field smooth_mask(const Grid& g, const std::vector<std::uint8_t>& mask, double amplitude,
                  double width_cells = 5.0);

struct StarDecayOptions {
    Grid grid{2, 500, 0.0, 1.0};
    PolarShape shape{};
    double amplitude = 1.0;
    double smooth_width_cells = 5.0;
    SolverConfig solver; // scheme must be dr
    std::vector<double> snapshot_times;
    int trace_stride = 1;
};

struct StarDecayResult {
    Field initial;
    HeatRunResult run;
};

/// Smoothed star indicator decaying under the parabolic Douglas-Rachford flow.
StarDecayResult run_heat_2d_star(double gamma, StarDecayOptions opt);

// ---------------------------------------------------------------- graphs

struct CloudGraphParams {
    int n_nodes = 2000;
    int ambient_dim = 100;
    double off_plane_std = 0.05; // spread away from the main 2D subspace
    int k = 8;                   // nearest neighbors per node
    std::uint64_t seed = 1;
};

struct CloudGraph {
    Graph graph;
    std::vector<std::array<double, 2>> positions; // in-plane coordinates
    double kernel_scale;                          // s in exp(-d^2 / 2 s^2)
};

/// Seeded point cloud near a 2D subspace of R^ambient_dim with kNN Gaussian weights.
CloudGraph make_knn_cloud_graph(const CloudGraphParams& p);

struct GraphScenario {
    Graph graph;
    int source = 0; // Kronecker-delta initial node
    double gamma = 0.0;
    double tau = 0.5;
    double t_end = 0.0;
    int trace_stride = 1;
    std::vector<double> snapshot_times;
};

struct GraphRunResult {
    DiagnosticsTrace trace; // support_measure column counts nodes
    std::vector<std::pair<double, std::vector<double>>> snapshots;
    double extinction_time = std::numeric_limits<double>::quiet_NaN();
    long steps = 0;
};

GraphRunResult run_graph_diffusion(const GraphScenario& sc);

// ---------------------------------------------------------------- signum-Gordon

struct SignumGordonOptions {
    double tau = 0.0;
    double t_end = 0.0;
    std::vector<double> snapshot_times;
    int trace_stride = 1;
};

struct SignumGordonResult {
    DiagnosticsTrace trace;
    std::vector<std::pair<double, Field>> snapshots;
    Field u_final, u_prev; // last two levels, for restart or reversal
    long steps = 0;
};

/// Leapfrog-shrink evolution of u_tt - Lap(u) = -sign(u) from (g1, g2).
SignumGordonResult run_signum_gordon(const Field& g1, const Field& g2,
                                     const SignumGordonOptions& opt);

// ---------------------------------------------------------------- sandpile

struct SandpileRegion {
    std::vector<std::uint8_t> mask;
    double alpha = 0.0; // mass density injected on the region
};

struct SandpileProblem {
    Grid grid; // 2D
    std::vector<SandpileRegion> regions;

    Field forcing() const;       // f = sum alpha_j chi_j
    double injected_mass() const; // sum alpha_j |S_j|
};

struct SandpileSolveResult {
    Field u;
    SupportSet supp;
    StationaryResult info;
    double mass_identity_rel_error; // | |supp u| - sum alpha_j |S_j| | / mass
    std::vector<std::pair<long, Field>> iter_snapshots;
};

/// Stationary Douglas-Rachford solve of Lap(u) = p(u) - f (gamma = 1).
SandpileSolveResult sandpile_solve(const SandpileProblem& p, const SolverConfig& cfg,
                                   const std::vector<long>& snapshot_iters = {});

struct ToppleResult {
    std::vector<double> mass; // final per-cell mass
    SupportSet occupied;      // cells with final mass >= 1 - 1e-6
    long sweeps = 0;
    bool converged = false;
    double max_excess = 0.0;
    double mass_drift_rel = 0.0; // worst per-sweep drift of the total mass
};

/** Direct divisible-sandpile relaxation: every cell with mass above capacity 1
 *  sends its excess in equal quarters to the 4 neighbors (synchronous two-buffer
 *  sweeps) until the largest excess is below eps_stop_rel * total mass. */
ToppleResult sandpile_topple(const SandpileProblem& p, double eps_stop_rel = 1e-10,
                             long max_sweeps = 2000000);

/// |A and B| / |A or B| of two masks; 1.0 when both are empty.
double jaccard(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);

} // namespace l1pde
