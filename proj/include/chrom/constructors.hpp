#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chrom/tensor.hpp"

namespace chrom {

/// Multigraph as an edge list; parallel edges allowed, loops rejected by
/// the operations that cannot handle them.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    void validate() const;
    bool has_loop() const;
    bool connected() const;
};

/// Represented matroid: the column matroid of an integer matrix.
struct Matroid {
    std::vector<std::vector<std::int64_t>> matrix; // rows; columns = ground set

    int ground_size() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }
};

/// Diagonal |E| x |E| pencil of edge differences x_head - x_tail, with
/// the last vertex grounded: a = |V|-1 slices, n = |E|.
Tensor graph_to_tensor(const Graph& G);

/// Signed incidence matrix with columns indexed by edges (+1 head,
/// -1 tail); its column matroid is the graphic matroid of G.
Matroid graph_incidence_matroid(const Graph& G);

/// T = sum_{k=1}^r u_k (x) v_k (x) w_k with integer factor entries drawn
/// uniformly from [-99, 99]. When a <= min(r, n^2), resamples until the
/// contraction dimension is exactly a.
Tensor generic_rank_r_tensor(int a, int n, int r, std::uint64_t seed);

/// Tensor with the given slices (direct entry of a matrix space).
Tensor model_from_matrix_space(std::vector<IntMat> slices);

} // namespace chrom
