#include <cmath>
#include <numbers>

#include "l1pde/applications.hpp"
#include "l1pde/errors.hpp"

namespace l1pde {

namespace {

std::vector<std::uint8_t> polar_mask(const Grid& g, const PolarShape& s) {
    if (g.dim != 2) throw ConfigError("shape masks need a 2D grid");
    if (!(s.r0 > 0.0) || std::abs(s.eps) >= 1.0 || s.k < 1)
        throw ConfigError("degenerate shape: need r0 > 0, |eps| < 1, k >= 1");
    std::vector<std::uint8_t> mask(g.size(), 0);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.coord(i) - s.cx;
        for (int j = 0; j < g.n; ++j) {
            const double y = g.coord(j) - s.cy;
            const double r = std::hypot(x, y);
            const double theta = std::atan2(y, x);
            const double rim = s.r0 * (1.0 + s.eps * std::cos(s.k * theta));
            mask[std::size_t(i) * g.n + j] = (r <= rim);
        }
    }
    return mask;
}

struct Pt {
    double x, y;
};

// one Koch subdivision level; polygon is counterclockwise, bumps point outward
std::vector<Pt> koch_refine(const std::vector<Pt>& poly) {
    std::vector<Pt> out;
    out.reserve(poly.size() * 4);
    const double c = std::cos(-std::numbers::pi / 3.0);
    const double sn = std::sin(-std::numbers::pi / 3.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt a = poly[i];
        const Pt b = poly[(i + 1) % poly.size()];
        const double dx = (b.x - a.x) / 3.0, dy = (b.y - a.y) / 3.0;
        const Pt p1{a.x + dx, a.y + dy};
        const Pt p2{a.x + 2 * dx, a.y + 2 * dy};
        const Pt peak{p1.x + c * dx - sn * dy, p1.y + sn * dx + c * dy};
        out.push_back(a);
        out.push_back(p1);
        out.push_back(peak);
        out.push_back(p2);
    }
    return out;
}

bool point_in_polygon(const std::vector<Pt>& poly, double x, double y) {
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        if ((poly[i].y > y) != (poly[j].y > y)) {
            const double xi = poly[j].x + (poly[i].x - poly[j].x) * (y - poly[j].y) /
                                              (poly[i].y - poly[j].y);
            if (x < xi) inside = !inside;
        }
    }
    return inside;
}

} // namespace

std::vector<std::uint8_t> make_star_mask(const Grid& g, const PolarShape& s) {
    return polar_mask(g, s);
}

std::vector<std::uint8_t> make_flower_mask(const Grid& g, const PolarShape& s) {
    PolarShape f = s;
    if (f.eps == 0.0) f.eps = 0.65; // flowers have deep petals by default
    return polar_mask(g, f);
}

std::vector<std::uint8_t> make_rect_mask(const Grid& g, double x0, double y0, double x1,
                                         double y1) {
    if (g.dim != 2) throw ConfigError("rect mask needs a 2D grid");
    if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("degenerate rectangle");
    std::vector<std::uint8_t> mask(g.size(), 0);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.coord(i);
        for (int j = 0; j < g.n; ++j) {
            const double y = g.coord(j);
            mask[std::size_t(i) * g.n + j] = (x >= x0 && x < x1 && y >= y0 && y < y1);
        }
    }
    return mask;
}

std::vector<std::uint8_t> make_fractal_mask(const Grid& g, int depth, double scale,
                                            double cx, double cy) {
    if (g.dim != 2) throw ConfigError("fractal mask needs a 2D grid");
    if (!(scale > 0.0) || depth < 0 || depth > 7)
        throw ConfigError("fractal mask: need scale > 0 and depth in [0, 7]");
    // counterclockwise equilateral triangle with circumradius `scale`
    std::vector<Pt> poly;
    for (int v = 0; v < 3; ++v) {
        const double ang = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * v / 3.0;
        poly.push_back({cx + scale * std::cos(ang), cy + scale * std::sin(ang)});
    }
    for (int d = 0; d < depth; ++d) poly = koch_refine(poly);
    std::vector<std::uint8_t> mask(g.size(), 0);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.coord(i);
        for (int j = 0; j < g.n; ++j)
            mask[std::size_t(i) * g.n + j] = point_in_polygon(poly, x, g.coord(j));
    }
    return mask;
}

double mask_measure(const Grid& g, const std::vector<std::uint8_t>& mask) {
    std::size_t count = 0;
    for (auto m : mask) count += m;
    return double(count) * g.cell_measure();
}

Field smooth_mask(const Grid& g, const std::vector<std::uint8_t>& mask, double amplitude,
                  double width_cells) {
    if (g.dim != 2) throw ConfigError("smooth_mask needs a 2D grid");
    if (mask.size() != g.size()) throw ConfigError("mask size mismatch");
    // discrete Gaussian, sigma in cells chosen so +-3 sigma spans width_cells
    const double sigma = std::max(width_cells / 6.0, 1e-9);
    const int radius = std::max(1, int(std::ceil(3.0 * sigma)));
    std::vector<double> kernel(2 * radius + 1);
    double ksum = 0.0;
    for (int r = -radius; r <= radius; ++r) {
        kernel[r + radius] = std::exp(-0.5 * (r / sigma) * (r / sigma));
        ksum += kernel[r + radius];
    }
    for (double& v : kernel) v /= ksum;

    const int n = g.n;
    Field tmp(g), out(g);
    for (std::size_t k = 0; k < mask.size(); ++k) tmp.values[k] = amplitude * mask[k];
    // separable periodic convolution: rows then columns
    Field rowpass(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int r = -radius; r <= radius; ++r) {
                int jj = (j + r) % n;
                if (jj < 0) jj += n;
                acc += kernel[r + radius] * tmp.at(i, jj);
            }
            rowpass.at(i, j) = acc;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int r = -radius; r <= radius; ++r) {
                int ii = (i + r) % n;
                if (ii < 0) ii += n;
                acc += kernel[r + radius] * rowpass.at(ii, j);
            }
            out.at(i, j) = acc;
        }
    return out;
}

} // namespace l1pde
