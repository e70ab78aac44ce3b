#include "l1pde/graph.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>

#include "l1pde/errors.hpp"

namespace l1pde {

Graph Graph::from_triplets(int node_count, const std::vector<std::array<double, 3>>& ijw) {
    if (node_count <= 0) throw ConfigError("graph needs at least one node");
    Graph g;
    g.n_ = node_count;
    std::vector<std::size_t> counts(node_count + 1, 0);
    for (const auto& t : ijw) {
        const int i = int(t[0]), j = int(t[1]);
        if (i < 0 || j < 0 || i >= node_count || j >= node_count)
            throw ConfigError("graph edge index out of range");
        if (i >= j) throw ConfigError("graph triplets must have i < j");
        if (!(t[2] > 0.0)) throw ConfigError("graph weights must be positive");
        ++counts[i + 1];
        ++counts[j + 1];
    }
    for (int i = 0; i < node_count; ++i) counts[i + 1] += counts[i];
    g.row_ptr_ = counts;
    g.col_.resize(2 * ijw.size());
    g.w_.resize(2 * ijw.size());
    std::vector<std::size_t> cursor(g.row_ptr_.begin(), g.row_ptr_.end() - 1);
    for (const auto& t : ijw) {
        const int i = int(t[0]), j = int(t[1]);
        g.col_[cursor[i]] = j;
        g.w_[cursor[i]++] = t[2];
        g.col_[cursor[j]] = i;
        g.w_[cursor[j]++] = t[2];
    }
    g.degree_.assign(node_count, 0.0);
    for (int i = 0; i < node_count; ++i)
        g.for_neighbors(i, [&](int, double w) { g.degree_[i] += w; });
    for (int i = 0; i < node_count; ++i)
        if (!(g.degree_[i] > 0.0))
            throw ConfigError("graph has an isolated node: " + std::to_string(i));
    return g;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!q.empty()) {
        const int i = q.front();
        q.pop();
        for_neighbors(i, [&](int j, double) {
            if (!seen[j]) {
                seen[j] = 1;
                ++visited;
                q.push(j);
            }
        });
    }
    return visited == n_;
}

std::vector<double> graph_laplacian_apply(const Graph& g, const std::vector<double>& u) {
    const int n = g.node_count();
    if (int(u.size()) != n) throw ConfigError("graph vector length mismatch");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double di = g.degree(i);
        double acc = 0.0;
        g.for_neighbors(i, [&](int j, double w) {
            acc += w * u[j] / std::sqrt(di * g.degree(j));
        });
        out[i] = u[i] - acc;
    }
    return out;
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    std::vector<std::array<double, 3>> ijw;
    int max_node = -1;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        double i, j, w;
        if (ss >> i >> j >> w) {
            ijw.push_back({i, j, w});
            max_node = std::max(max_node, int(std::max(i, j)));
        }
    }
    if (max_node < 0) throw IoError("no edges in graph file: " + path);
    return Graph::from_triplets(max_node + 1, ijw);
}

void write_graph(const Graph& g, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw IoError("cannot open for writing: " + path);
    std::fprintf(fp, "# nodes=%d\n", g.node_count());
    for (int i = 0; i < g.node_count(); ++i)
        g.for_neighbors(i, [&](int j, double w) {
            if (i < j) std::fprintf(fp, "%d %d %.17g\n", i, j, w);
        });
    if (std::fclose(fp) != 0) throw IoError("write failed: " + path);
}

} // namespace l1pde
