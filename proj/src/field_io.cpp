#include "l1pde/field_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "l1pde/errors.hpp"

namespace l1pde {

namespace {

void write_rows(std::FILE* fp, const Field& u) {
    const int n = u.grid.n;
    char buf[32];
    if (u.grid.dim == 1) {
        for (int i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g\n", u.values[i]);
            std::fputs(buf, fp);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::snprintf(buf, sizeof buf, "%.17g%c", u.at(i, j), j + 1 == n ? '\n' : ',');
                std::fputs(buf, fp);
            }
        }
    }
}

} // namespace

void write_field_csv(const Field& u, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw IoError("cannot open for writing: " + path);
    std::fprintf(fp, "# grid: d=%d n=%d xmin=%.17g xmax=%.17g\n", u.grid.dim, u.grid.n,
                 u.grid.xmin, u.grid.xmax);
    write_rows(fp, u);
    if (std::fclose(fp) != 0) throw IoError("write failed: " + path);
}

void write_mask_csv(const Grid& g, const std::vector<std::uint8_t>& mask,
                    const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw IoError("cannot open for writing: " + path);
    std::fprintf(fp, "# grid: d=%d n=%d xmin=%.17g xmax=%.17g\n", g.dim, g.n, g.xmin, g.xmax);
    const int n = g.n;
    if (g.dim == 1) {
        for (int i = 0; i < n; ++i) std::fprintf(fp, "%d\n", int(mask[i]));
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                std::fprintf(fp, "%d%c", int(mask[std::size_t(i) * n + j]), j + 1 == n ? '\n' : ',');
    }
    if (std::fclose(fp) != 0) throw IoError("write failed: " + path);
}

Field read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    std::string header;
    std::getline(in, header);
    int dim = 0, n = 0;
    double xmin = 0, xmax = 0;
    if (std::sscanf(header.c_str(), "# grid: d=%d n=%d xmin=%lf xmax=%lf", &dim, &n, &xmin,
                    &xmax) != 4)
        throw IoError("bad field header in " + path);
    Grid g(dim, n, xmin, xmax);
    Field u(g);
    std::string line;
    std::size_t k = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (k >= u.values.size()) throw IoError("too many values in " + path);
            u.values[k++] = std::strtod(cell.c_str(), nullptr);
        }
    }
    if (k != u.values.size()) throw IoError("too few values in " + path);
    if (!u.finite()) throw IoError("non-finite values in " + path);
    return u;
}

} // namespace l1pde
