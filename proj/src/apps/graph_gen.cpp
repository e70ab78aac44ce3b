#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "l1pde/applications.hpp"
#include "l1pde/errors.hpp"

namespace l1pde {

CloudGraph make_knn_cloud_graph(const CloudGraphParams& p) {
    if (p.n_nodes < 2 || p.k < 1 || p.k >= p.n_nodes || p.ambient_dim < 2)
        throw ConfigError("cloud graph: bad node/neighbor counts");

    std::mt19937_64 rng(p.seed);
    std::normal_distribution<double> unit(0.0, 1.0);

    // points live near the first two coordinate axes of R^ambient_dim
    const int d = p.ambient_dim;
    std::vector<double> pts(std::size_t(p.n_nodes) * d);
    CloudGraph out;
    out.positions.resize(p.n_nodes);
    for (int i = 0; i < p.n_nodes; ++i) {
        double* x = pts.data() + std::size_t(i) * d;
        x[0] = unit(rng);
        x[1] = unit(rng);
        for (int c = 2; c < d; ++c) x[c] = p.off_plane_std * unit(rng);
        out.positions[i] = {x[0], x[1]};
    }

    auto dist2 = [&](int i, int j) {
        const double* a = pts.data() + std::size_t(i) * d;
        const double* b = pts.data() + std::size_t(j) * d;
        double acc = 0.0;
        for (int c = 0; c < d; ++c) {
            const double diff = a[c] - b[c];
            acc += diff * diff;
        }
        return acc;
    };

    std::set<std::pair<int, int>> edges;
    std::vector<double> knn_dists;
    knn_dists.reserve(std::size_t(p.n_nodes) * p.k);
    std::vector<std::pair<double, int>> cand(p.n_nodes);
    for (int i = 0; i < p.n_nodes; ++i) {
        for (int j = 0; j < p.n_nodes; ++j) cand[j] = {dist2(i, j), j};
        cand[i].first = std::numeric_limits<double>::infinity();
        std::partial_sort(cand.begin(), cand.begin() + p.k, cand.end());
        for (int m = 0; m < p.k; ++m) {
            const int j = cand[m].second;
            edges.insert({std::min(i, j), std::max(i, j)});
            knn_dists.push_back(std::sqrt(cand[m].first));
        }
    }

    std::sort(knn_dists.begin(), knn_dists.end());
    const double s = knn_dists[knn_dists.size() / 2];
    out.kernel_scale = s;

    std::vector<std::array<double, 3>> ijw;
    ijw.reserve(edges.size());
    for (const auto& [i, j] : edges) {
        const double w = std::exp(-dist2(i, j) / (2.0 * s * s));
        ijw.push_back({double(i), double(j), w});
    }
    out.graph = Graph::from_triplets(p.n_nodes, ijw);
    return out;
}

} // namespace l1pde
