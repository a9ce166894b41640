#pragma once

// Shared inputs for the test suites: the worked matrix spaces, small
// graphs, and random-object generators.

#include <vector>

#include "chrom/constructors.hpp"
#include "chrom/poly.hpp"
#include "chrom/rng.hpp"
#include "chrom/tensor.hpp"

namespace fixtures {

inline chrom::IntMat sym3(std::int64_t m00, std::int64_t m01, std::int64_t m02,
                          std::int64_t m11, std::int64_t m12, std::int64_t m22) {
    return {{m00, m01, m02}, {m01, m11, m12}, {m02, m12, m22}};
}

/// 5-dim space of symmetric 3x3 concentration matrices
/// [[a,b,d],[b,c,e],[d,e,a+b+c+d+e]].
inline chrom::Tensor concentration_model_3x3() {
    std::vector<chrom::IntMat> slices = {
        sym3(1, 0, 0, 0, 0, 1), // a
        sym3(0, 1, 0, 0, 0, 1), // b
        sym3(0, 0, 0, 1, 0, 1), // c
        sym3(0, 0, 1, 0, 0, 1), // d
        sym3(0, 0, 0, 0, 1, 1), // e
    };
    return chrom::model_from_matrix_space(std::move(slices));
}

/// 8-dim space of symmetric 4x4 matrices with a cyclic off-diagonal
/// pattern: [[a,e,0,h],[e,b,f,0],[0,f,c,g],[h,0,g,d]].
inline chrom::Tensor cyclic_quadrics_4x4() {
    auto unit = [](int i, int j) {
        chrom::IntMat m(4, std::vector<std::int64_t>(4, 0));
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        if (i != j) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
        return m;
    };
    std::vector<chrom::IntMat> slices = {
        unit(0, 0), unit(1, 1), unit(2, 2), unit(3, 3), // a b c d
        unit(0, 1), unit(1, 2), unit(2, 3), unit(0, 3), // e f g h
    };
    return chrom::model_from_matrix_space(std::move(slices));
}

/// 4-dim space [[a,b,0],[b,c,0],[0,0,d]]; det = (ac - b^2) d.
inline chrom::Tensor block_symmetric_3x3() {
    std::vector<chrom::IntMat> slices = {
        sym3(1, 0, 0, 0, 0, 0), // a
        sym3(0, 1, 0, 0, 0, 0), // b
        sym3(0, 0, 0, 1, 0, 0), // c
        sym3(0, 0, 0, 0, 0, 1), // d
    };
    return chrom::model_from_matrix_space(std::move(slices));
}

inline chrom::Tensor identity_tensor(int n) {
    chrom::IntMat id(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return chrom::model_from_matrix_space({id});
}

inline chrom::Graph cycle_graph(int k) {
    chrom::Graph G;
    G.vertex_count = k;
    for (int i = 0; i < k; ++i) G.edges.emplace_back(i, (i + 1) % k);
    return G;
}

inline chrom::Graph single_edge() {
    chrom::Graph G;
    G.vertex_count = 2;
    G.edges.emplace_back(0, 1);
    return G;
}

/// Connected loopless multigraph: a random spanning tree plus extra
/// random (possibly parallel) edges.
inline chrom::Graph random_connected_graph(chrom::SplitMix64& rng, int max_vertices, int max_edges) {
    chrom::Graph G;
    G.vertex_count = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_vertices - 1)));
    for (int v = 1; v < G.vertex_count; ++v)
        G.edges.emplace_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v))), v);
    const int max_extra = max_edges - static_cast<int>(G.edges.size());
    const int extra = max_extra > 0 ? static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_extra) + 1)) : 0;
    for (int e = 0; e < extra; ++e) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(G.vertex_count)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(G.vertex_count)));
        if (u == v) v = (v + 1) % G.vertex_count;
        G.edges.emplace_back(u, v);
    }
    return G;
}

inline chrom::MultiPoly random_poly(chrom::SplitMix64& rng, int nvars, int max_terms, int max_exp,
                                    const chrom::PrimeField& F) {
    std::vector<chrom::Term> terms;
    const int count = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < count; ++t) {
        chrom::Term term;
        term.c = F.random(rng);
        std::uint32_t deg = 0;
        for (int v = 0; v < nvars; ++v) {
            term.m.e[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>(rng.next_below(static_cast<std::uint64_t>(max_exp) + 1));
            deg += term.m.e[static_cast<std::size_t>(v)];
        }
        term.m.deg = deg;
        terms.push_back(term);
    }
    return chrom::MultiPoly::from_terms(nvars, std::move(terms), F);
}

} // namespace fixtures
