#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace l1pde {

/** Sparse symmetric weighted graph in CSR form with per-node degree d_i = sum_j A_ij.
 *  Built from coordinate triplets (i, j, w) with i < j, expanded symmetrically. */
class Graph {
  public:
    Graph() = default;
    static Graph from_triplets(int node_count,
                               const std::vector<std::array<double, 3>>& ijw);

    int node_count() const { return n_; }
    double degree(int i) const { return degree_[i]; }
    const std::vector<double>& degrees() const { return degree_; }

    /// Iterates neighbors of i: calls fn(j, w) for each edge (i, j).
    template <class Fn>
    void for_neighbors(int i, Fn&& fn) const {
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) fn(col_[k], w_[k]);
    }

    std::size_t edge_count() const { return w_.size() / 2; }
    bool connected() const;

  private:
    int n_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<int> col_;
    std::vector<double> w_;
    std::vector<double> degree_;
};

/// Normalized graph Laplacian (I - D^{-1/2} A D^{-1/2}) u. Annihilates sqrt(d).
std::vector<double> graph_laplacian_apply(const Graph& g, const std::vector<double>& u);

/// Text format: lines "i j w" with 0-based i < j, w > 0; '#' starts a comment.
Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);

} // namespace l1pde
