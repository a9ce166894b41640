#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chrom/poly.hpp"

namespace chrom {

/// Critical-pair selection order. Sugar (the homogenizing degree carried
/// through reductions) is the default; the plain normal strategy picks by
/// lcm degree alone and behaves better on some dense generic systems.
enum class PairStrategy { sugar, normal };

struct GroebnerConfig {
    PairStrategy strategy = PairStrategy::sugar;
    std::size_t max_basis = 4000;       // generators kept at any time
    std::size_t max_pairs = 200000;     // live critical pairs
    std::uint64_t max_reductions = 2000000;
    std::uint64_t max_term_ops = 0;     // deterministic work cap; 0 = unlimited
};

struct GroebnerStats {
    std::uint64_t pairs_generated = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t pairs_skipped = 0;    // removed by the Buchberger criteria
    std::uint64_t reductions_to_zero = 0;
    std::uint64_t term_ops = 0;         // merged terms during reduction
    std::uint32_t max_degree = 0;
    std::size_t basis_size = 0;
};

/// Reduced Groebner basis: monic, interreduced generators, increasing
/// leading terms nowhere divisible by one another.
struct GroebnerBasis {
    int nvars = 0;
    std::vector<MultiPoly> generators;
    GroebnerStats stats;
};

struct StaircaseCount {
    bool is_zero_dimensional = false;
    std::optional<std::uint64_t> standard_monomial_count;
};

/// Normal form of f modulo the (not necessarily Groebner) list `basis`:
/// no term of the result is divisible by any leading term of the basis,
/// and f - result lies in the generated ideal.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis, const PolyOps& ops);

/// Buchberger's algorithm with the coprimality and chain criteria.
/// Throws LimitError when a configured cap is exceeded.
GroebnerBasis buchberger(std::vector<MultiPoly> gens, const PolyOps& ops,
                         const GroebnerConfig& cfg = {});

/// Counts monomials outside the leading-term staircase. The ideal is
/// zero-dimensional iff every variable has a pure-power leading term;
/// the count then equals the solution count with multiplicity.
StaircaseCount count_standard_monomials(const GroebnerBasis& basis);

} // namespace chrom
