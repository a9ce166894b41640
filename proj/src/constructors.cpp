#include "chrom/constructors.hpp"

#include <numeric>

namespace chrom {

void Graph::validate() const {
    if (vertex_count < 1) throw PreconditionError("graph: need at least one vertex");
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw PreconditionError("graph: edge endpoint out of range");
    }
}

bool Graph::has_loop() const {
    for (const auto& [u, v] : edges)
        if (u == v) return true;
    return false;
}

bool Graph::connected() const {
    if (vertex_count == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == vertex_count;
}

Tensor graph_to_tensor(const Graph& G) {
    G.validate();
    if (G.edges.empty()) throw PreconditionError("graph: need at least one edge");
    if (G.has_loop()) throw PreconditionError("loop: a loop edge makes every pencil member singular");
    if (!G.connected()) throw PreconditionError("graph: disconnected graphs are not supported");
    const int n = static_cast<int>(G.edges.size());
    const int a = G.vertex_count - 1; // last vertex grounded
    Tensor T;
    T.a = a;
    T.n = n;
    T.slices.assign(static_cast<std::size_t>(a),
                    IntMat(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)));
    for (int e = 0; e < n; ++e) {
        const auto [u, v] = G.edges[static_cast<std::size_t>(e)];
        if (v < a) T.slices[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] += 1;
        if (u < a) T.slices[static_cast<std::size_t>(u)][static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] -= 1;
    }
    return T;
}

Matroid graph_incidence_matroid(const Graph& G) {
    G.validate();
    Matroid M;
    M.matrix.assign(static_cast<std::size_t>(G.vertex_count),
                    std::vector<std::int64_t>(G.edges.size(), 0));
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        const auto [u, v] = G.edges[e];
        if (u == v) continue; // loop: zero column
        M.matrix[static_cast<std::size_t>(v)][e] += 1;
        M.matrix[static_cast<std::size_t>(u)][e] -= 1;
    }
    return M;
}

Tensor generic_rank_r_tensor(int a, int n, int r, std::uint64_t seed) {
    if (a < 1 || n < 1 || r < 1)
        throw PreconditionError("generic_rank_r_tensor: a, n, r must be positive");
    const int expected_dim = std::min(a, std::min(r, n * n));
    for (int round = 0;; ++round) {
        SplitMix64 rng = derive_stream(seed, {hash_tag("rank-r-tensor"), static_cast<std::uint64_t>(a),
                                              static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r),
                                              static_cast<std::uint64_t>(round)});
        auto draw = [&]() { return static_cast<std::int64_t>(rng.next_below(199)) - 99; };
        Tensor T;
        T.a = a;
        T.n = n;
        T.slices.assign(static_cast<std::size_t>(a),
                        IntMat(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)));
        for (int k = 0; k < r; ++k) {
            std::vector<std::int64_t> u(static_cast<std::size_t>(a)), v(static_cast<std::size_t>(n)),
                w(static_cast<std::size_t>(n));
            for (auto& x : u) x = draw();
            for (auto& x : v) x = draw();
            for (auto& x : w) x = draw();
            for (int i = 0; i < a; ++i)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        T.slices[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] +=
                            u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(p)] *
                            w[static_cast<std::size_t>(q)];
        }
        SplitMix64 prng = derive_stream(seed, {hash_tag("rank-r-dim-check"), static_cast<std::uint64_t>(round)});
        PrimeField F = random_prime(31, prng);
        try {
            ContractionSpace S = contract(T, F);
            if (S.dim() == expected_dim) return T;
        } catch (const PreconditionError&) {
            // zero or rank-deficient sample; fall through and resample
        }
        if (round > 32)
            throw PreconditionError("generic_rank_r_tensor: could not reach the expected dimension");
    }
}

Tensor model_from_matrix_space(std::vector<IntMat> slices) {
    if (slices.empty()) throw PreconditionError("matrix space: no slices given");
    const std::size_t n = slices[0].size();
    for (const IntMat& s : slices) {
        if (s.size() != n) throw PreconditionError("matrix space: ragged slice list");
        for (const auto& row : s)
            if (row.size() != n) throw PreconditionError("matrix space: slice is not square");
    }
    Tensor T;
    T.a = static_cast<int>(slices.size());
    T.n = static_cast<int>(n);
    T.slices = std::move(slices);
    T.validate();
    return T;
}

} // namespace chrom
