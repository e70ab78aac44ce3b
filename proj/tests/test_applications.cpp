#include <doctest.h>

#include <cmath>
#include <numbers>

#include "l1pde/applications.hpp"
#include "l1pde/errors.hpp"

using namespace l1pde;

TEST_CASE("polar masks: disk area, monotonicity, lobe symmetry") {
    Grid g(2, 200, 0.0, 1.0);
    PolarShape disk{5, 0.3, 0.0, 0.5, 0.5};
    auto mask = make_star_mask(g, disk);
    const double area = mask_measure(g, mask);
    const double exact = std::numbers::pi * 0.3 * 0.3;
    CHECK(std::abs(area - exact) < 2.0 * std::numbers::pi * 0.3 * g.spacing());

    PolarShape smaller = disk;
    smaller.r0 = 0.2;
    CHECK(mask_measure(g, make_star_mask(g, smaller)) < area);

    // star pixel counts per angular sector of width 2 pi / k agree
    PolarShape star{5, 0.25, 0.3, 0.5, 0.5};
    auto smask = make_star_mask(g, star);
    std::vector<long> sector(5, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (!smask[std::size_t(i) * g.n + j]) continue;
            const double th = std::atan2(g.coord(j) - 0.5, g.coord(i) - 0.5);
            int s = int(std::floor((th + std::numbers::pi) / (2.0 * std::numbers::pi / 5)));
            sector[std::min(s, 4)]++;
        }
    for (int s = 1; s < 5; ++s)
        CHECK(std::abs(double(sector[s]) - double(sector[0])) <
              0.02 * double(sector[0]) + 8.0);

    CHECK_THROWS_AS(make_star_mask(g, PolarShape{5, -0.1, 0.3, 0.5, 0.5}), ConfigError);
    CHECK_THROWS_AS(make_star_mask(g, PolarShape{5, 0.2, 1.0, 0.5, 0.5}), ConfigError);
}

TEST_CASE("fractal mask fills a positive area inside the triangle hull") {
    Grid g(2, 128, 0.0, 1.0);
    auto mask = make_fractal_mask(g, 3, 0.3, 0.5, 0.5);
    const double area = mask_measure(g, mask);
    // snowflake area = (8/5) * area of the base triangle in the infinite limit
    const double tri = 3.0 * std::sqrt(3.0) / 4.0 * 0.3 * 0.3;
    CHECK(area > tri);
    CHECK(area < 2.0 * tri);
}

TEST_CASE("smooth mask preserves total mass and peaks inside") {
    Grid g(2, 128, 0.0, 1.0);
    auto mask = make_rect_mask(g, 0.4, 0.4, 0.6, 0.6);
    Field sm = smooth_mask(g, mask, 2.0, 5.0);
    double total = 0.0, raw = 0.0;
    for (std::size_t k = 0; k < mask.size(); ++k) {
        total += sm.values[k];
        raw += 2.0 * mask[k];
    }
    CHECK(total == doctest::Approx(raw).epsilon(1e-12));
    CHECK(sm.at(64, 64) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("trivial heat run stays identically zero") {
    Grid g(1, 64, -4.0, 4.0);
    HeatRunOptions opt;
    opt.solver.tau = g.spacing() * g.spacing() / 4.0;
    opt.solver.gamma = 1.0;
    opt.solver.t_end = 0.05;
    HeatRunResult res = run_heat_1d(Field(g), Field(g), opt);
    CHECK(res.extinction_time == doctest::Approx(opt.solver.tau));
    for (double v : res.trace.l1) CHECK(v == 0.0);
}

TEST_CASE("heat run records support endpoints and snapshots") {
    Grid g(1, 256, -8.0, 8.0);
    HeatRunOptions opt;
    opt.solver.tau = g.spacing() * g.spacing() / 4.0;
    opt.solver.gamma = 1.0;
    opt.solver.t_end = 0.01;
    opt.snapshot_times = {0.0, 0.005, 0.01};
    Field f = sample(g, [](double x) { return 2.0 * std::exp(-5.0 * x * x); });
    HeatRunResult res = run_heat_1d(f, Field(g), opt);
    CHECK(res.snapshots.size() == 3);
    CHECK(res.trace.support_left.size() == res.trace.rows());
    // forced run grows a symmetric support around the origin
    const double right = res.trace.support_right.back();
    const double left = res.trace.support_left.back();
    CHECK(right > 0.3);
    CHECK(std::abs(right + left) < 2.0 * g.spacing());
    CHECK(!res.boundary_warning);
}

TEST_CASE("cloud graph generator is seeded and connected") {
    CloudGraphParams p;
    p.n_nodes = 300;
    p.k = 6;
    p.seed = 42;
    CloudGraph a = make_knn_cloud_graph(p);
    CloudGraph b = make_knn_cloud_graph(p);
    CHECK(a.graph.node_count() == 300);
    CHECK(a.graph.connected());
    CHECK(a.kernel_scale == b.kernel_scale);
    CHECK(a.graph.edge_count() == b.graph.edge_count());
    for (int i = 0; i < 300; ++i) CHECK(a.graph.degree(i) == b.graph.degree(i));

    p.seed = 43;
    CloudGraph c = make_knn_cloud_graph(p);
    CHECK(c.kernel_scale != a.kernel_scale);
}

TEST_CASE("graph diffusion: spread at gamma=0, containment in a disconnected graph") {
    // two disjoint 3-cycles
    Graph g = Graph::from_triplets(6, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                                       {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}});
    GraphScenario sc;
    sc.graph = g;
    sc.source = 0;
    sc.gamma = 0.0;
    sc.tau = 0.5;
    sc.t_end = 20.0;
    GraphRunResult res = run_graph_diffusion(sc);
    // support saturates at the source component and never crosses over
    CHECK(res.trace.support_measure.back() == 3.0);

    sc.gamma = 0.02;
    GraphRunResult res2 = run_graph_diffusion(sc);
    CHECK(!std::isnan(res2.extinction_time));
    CHECK(res2.trace.support_measure.back() == 0.0);
}

TEST_CASE("sandpile: degenerate and single-region cases") {
    Grid g(2, 128, 0.0, 1.0);
    SandpileProblem p;
    p.grid = g;
    p.regions.push_back({make_rect_mask(g, 0.4, 0.4, 0.6, 0.6), 0.0});
    SolverConfig cfg;
    cfg.tau = 0.1 * g.spacing();
    // alpha = 0: no mass, u stays zero
    SandpileSolveResult r0 = sandpile_solve(p, cfg);
    CHECK(r0.info.converged);
    for (double v : r0.u.values) CHECK(v == 0.0);

    // alpha = 1 is the at-capacity degenerate case: |f| <= 1 nowhere exceeds the
    // threshold, so the odometer vanishes while the occupied region is the region itself
    p.regions[0].alpha = 1.0;
    SandpileSolveResult r1 = sandpile_solve(p, cfg);
    CHECK(r1.info.converged);
    for (double v : r1.u.values) CHECK(v == 0.0);
    ToppleResult t1 = sandpile_topple(p);
    CHECK(t1.sweeps == 0);
    CHECK(t1.occupied.measure ==
          doctest::Approx(mask_measure(g, p.regions[0].mask)).epsilon(1e-12));

    // above capacity the mass identity is genuine: |supp u| = alpha |S|
    // (the deficit is an O(h) boundary layer, still coarse at n = 128)
    p.regions[0].alpha = 1.5;
    SandpileSolveResult r2 = sandpile_solve(p, cfg);
    CHECK(r2.info.converged);
    CHECK(r2.mass_identity_rel_error < 0.08);
    double umin = 0.0;
    for (double v : r2.u.values) umin = std::min(umin, v);
    CHECK(umin >= 0.0);
}

TEST_CASE("toppling oracle: no-op below capacity, symmetry, conservation") {
    Grid g(2, 64, 0.0, 1.0);
    SandpileProblem tiny;
    tiny.grid = g;
    std::vector<std::uint8_t> one(g.size(), 0);
    one[std::size_t(32) * 64 + 32] = 1;
    tiny.regions.push_back({one, 0.75}); // total mass < 1 in a single cell
    ToppleResult t0 = sandpile_topple(tiny);
    CHECK(t0.converged);
    CHECK(t0.sweeps == 0);
    CHECK(t0.occupied.count == 0); // never reaches capacity

    // mass 2 in the center cell: occupied region has the full dihedral symmetry
    SandpileProblem two;
    two.grid = g;
    two.regions.push_back({one, 2.0});
    ToppleResult t2 = sandpile_topple(two);
    CHECK(t2.converged);
    CHECK(t2.mass_drift_rel < 1e-12);
    auto at = [&](int i, int j) { return t2.mass[std::size_t(i) * 64 + j]; };
    for (int di = -5; di <= 5; ++di)
        for (int dj = -5; dj <= 5; ++dj) {
            CHECK(at(32 + di, 32 + dj) == doctest::Approx(at(32 - di, 32 + dj)));
            CHECK(at(32 + di, 32 + dj) == doctest::Approx(at(32 + dj, 32 + di)));
        }
}

TEST_CASE("sandpile DR support matches the toppling oracle on a small problem") {
    Grid g(2, 128, 0.0, 1.0);
    SandpileProblem p;
    p.grid = g;
    p.regions.push_back({make_rect_mask(g, 0.30, 0.38, 0.56, 0.64), 1.0});
    p.regions.push_back({make_rect_mask(g, 0.44, 0.38, 0.70, 0.64), 1.0});
    SolverConfig cfg;
    cfg.tau = 0.1 * g.spacing();
    SandpileSolveResult sr = sandpile_solve(p, cfg);
    ToppleResult tr = sandpile_topple(p);
    CHECK(sr.info.converged);
    CHECK(tr.converged);
    CHECK(jaccard(sr.supp.mask, tr.occupied.mask) >= 0.95);
}

TEST_CASE("signum-gordon run: zero data and support confinement") {
    Grid g(1, 256, -4.0, 4.0);
    SignumGordonOptions opt;
    opt.tau = 0.5 * g.spacing();
    opt.t_end = 0.5;
    SignumGordonResult res = run_signum_gordon(Field(g), Field(g), opt);
    for (double v : res.u_final.values) CHECK(v == 0.0);

    // compact bump stays compact: support grows at most at unit speed
    Field g1 = sample(g, [](double x) {
        const double q = 1.0 - x * x;
        return q > 0.0 ? 0.5 * q * q * q : 0.0;
    });
    SignumGordonResult r2 = run_signum_gordon(g1, Field(g), opt);
    SupportExtent ext = support_extent_1d(r2.u_final);
    CHECK(ext.right <= 1.0 + opt.t_end + 4.0 * g.spacing());
    CHECK(ext.left >= -1.0 - opt.t_end - 4.0 * g.spacing());
}

TEST_CASE("signum-gordon support measure is stable under refinement") {
    auto max_support = [](int n) {
        Grid g(1, n, -4.0, 4.0);
        SignumGordonOptions opt;
        opt.tau = 0.5 * g.spacing();
        opt.t_end = 1.0;
        Field g1 = sample(g, [](double x) {
            const double q = 1.0 - x * x;
            return q > 0.0 ? 0.5 * q * q * q : 0.0;
        });
        SignumGordonResult res = run_signum_gordon(g1, Field(g), opt);
        double m = 0.0;
        for (double s : res.trace.support_measure) m = std::max(m, s);
        return m;
    };
    const double coarse = max_support(512);
    const double fine = max_support(1024);
    CHECK(std::abs(coarse - fine) / fine < 0.05);
}
