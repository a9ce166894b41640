#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chrom/poly.hpp"

namespace chrom {

using IntMat = std::vector<std::vector<std::int64_t>>;
using FpMat = std::vector<std::vector<PrimeField::Elt>>;

/// a slices of an n x n integer tensor.
struct Tensor {
    int a = 0;
    int n = 0;
    std::vector<IntMat> slices;

    /// Validates shape: a >= 1, n >= 2, square slices, one nonzero.
    void validate() const;
};

/// The span of the tensor's slices inside Mat_n. The projective
/// dimension d and the basis are derived per prime from the stored
/// integer slices; counting runs re-derive them at each trial prime.
class ContractionSpace {
public:
    ContractionSpace(int n, int dim, std::vector<IntMat> slices)
        : n_(n), dim_(dim), slices_(std::move(slices)) {}

    int n() const { return n_; }
    int dim() const { return dim_; }          // vector-space dimension
    int d() const { return dim_ - 1; }        // projective dimension, coefficient index bound
    const std::vector<IntMat>& slices() const { return slices_; }

    /// Echelon basis B_0..B_d of the slice span modulo the given prime.
    /// Throws PreconditionError if the rank drops at this prime (caller
    /// should resample the prime).
    std::vector<FpMat> basis_mod(const PrimeField& F) const;

private:
    int n_;
    int dim_;
    std::vector<IntMat> slices_;
};

/// Row space of the a x n^2 flattening. The dimension is certified by
/// agreement of the rank at three independently derived primes.
ContractionSpace contract(const Tensor& T, const PrimeField& F);

/// True if some random F_p-combination of the basis has rank >= n-2.
/// One-sided: true is certain, false is reported after `trials` misses.
bool check_rank_precondition(const ContractionSpace& S, int trials, const PrimeField& F,
                             SplitMix64& rng);

int rank_mod_p(const std::vector<std::vector<PrimeField::Elt>>& rows, const PrimeField& F);

/// n x n matrix of affine-linear polynomials M(x) = sum_j x_j B_j (+ C).
struct Pencil {
    int n = 0;
    int nvars = 0;
    std::vector<std::vector<MultiPoly>> entries;

    static Pencil from_basis(const std::vector<FpMat>& basis, const PrimeField& F);
};

/// Minor table for one pencil, memoized on (row-subset, column-subset)
/// bitmask pairs across all sizes.
class MinorTable {
public:
    MinorTable(const Pencil& P, const PolyOps& ops) : P_(P), ops_(ops) {}

    const MultiPoly& minor(std::uint32_t rows, std::uint32_t cols);

    /// All C(n,i)^2 minors of size i, ordered by (rows, cols) masks.
    std::vector<MultiPoly> minors(int i);

    const MultiPoly& det();

    const Pencil& pencil() const { return P_; }

private:
    const Pencil& P_;
    const PolyOps& ops_;
    std::unordered_map<std::uint64_t, MultiPoly> memo_;
};

/// Directional derivatives of det(M(x)) along the given matrices:
/// g_j(x) = sum_{k,l} (B_j)_{kl} * cofactor_{kl}(M(x)). When directions
/// are the pencil basis itself these are the partials of det.
std::vector<MultiPoly> gradient_components(MinorTable& table, const std::vector<FpMat>& directions,
                                           const PolyOps& ops);

} // namespace chrom
