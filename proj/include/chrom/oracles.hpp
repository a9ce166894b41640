#pragma once

#include <cstdint>
#include <vector>

#include "chrom/constructors.hpp"

namespace chrom {

/// Dense integer polynomial in one variable k; c[i] is the k^i
/// coefficient. Big enough for chromatic/characteristic polynomials of
/// the graphs and matroids the oracles accept.
struct IntPoly {
    std::vector<std::int64_t> c;

    int degree() const;
    bool is_zero() const;
    std::int64_t eval(std::int64_t k) const;
    /// Exact division by (k - root); throws if the remainder is nonzero.
    IntPoly div_linear(std::int64_t root) const;

    static IntPoly monomial(int deg);
};

IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b);

/// Chromatic polynomial by deletion-contraction, memoized on
/// canonicalized graphs. Zero polynomial iff G has a loop.
IntPoly graph_chromatic_polynomial(const Graph& G);

/// chi_G(k) / (k (k-1)) for a connected loopless graph with >= 1 edge;
/// absolute coefficients from degree |V|-2 down to 0. Equals the m-vector
/// of the chromatic polynomial of graph_to_tensor(G).
std::vector<std::int64_t> graph_chromatic_oracle(const Graph& G);

/// Whitney rank sum: chi_M(k) = sum_{S subset E} (-1)^|S| k^(r(E)-r(S)),
/// ranks by exact fraction-free elimination over the rationals.
IntPoly matroid_characteristic_polynomial(const Matroid& M);

/// chi_M(k) / (k-1), absolute coefficients from degree r(E)-1 down to 0.
std::vector<std::int64_t> matroid_characteristic_oracle(const Matroid& M);

} // namespace chrom
