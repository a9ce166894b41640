#include "chrom/tensor.hpp"

#include <algorithm>

namespace chrom {

void Tensor::validate() const {
    if (a < 1 || n < 1) throw PreconditionError("tensor: need a >= 1 and n >= 1");
    if (static_cast<int>(slices.size()) != a) throw PreconditionError("tensor: slice count mismatch");
    bool nonzero = false;
    for (const IntMat& s : slices) {
        if (static_cast<int>(s.size()) != n) throw PreconditionError("tensor: slice is not n x n");
        for (const auto& row : s) {
            if (static_cast<int>(row.size()) != n) throw PreconditionError("tensor: slice is not n x n");
            for (std::int64_t v : row)
                if (v != 0) nonzero = true;
        }
    }
    if (!nonzero) throw PreconditionError("empty contraction: zero tensor");
}

int rank_mod_p(const std::vector<std::vector<PrimeField::Elt>>& rows_in, const PrimeField& F) {
    std::vector<std::vector<PrimeField::Elt>> rows = rows_in;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    int rank = 0;
    std::size_t col = 0;
    for (; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        PrimeField::Elt inv = F.inv(rows[static_cast<std::size_t>(rank)][col]);
        for (std::size_t c = col; c < ncols; ++c)
            rows[static_cast<std::size_t>(rank)][c] = F.mul(rows[static_cast<std::size_t>(rank)][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
            PrimeField::Elt f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[static_cast<std::size_t>(rank)][c]));
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::vector<PrimeField::Elt>> flatten_mod(const std::vector<IntMat>& slices,
                                                      const PrimeField& F) {
    std::vector<std::vector<PrimeField::Elt>> rows;
    rows.reserve(slices.size());
    for (const IntMat& s : slices) {
        std::vector<PrimeField::Elt> row;
        row.reserve(s.size() * s.size());
        for (const auto& r : s)
            for (std::int64_t v : r) row.push_back(F.from_int(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<PrimeField::Elt>> echelon_rows(const std::vector<IntMat>& slices,
                                                       const PrimeField& F) {
    std::vector<std::vector<PrimeField::Elt>> rows = flatten_mod(slices, F);
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        PrimeField::Elt inv = F.inv(rows[rank][col]);
        for (std::size_t c = col; c < ncols; ++c) rows[rank][c] = F.mul(rows[rank][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            PrimeField::Elt f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

} // namespace

std::vector<FpMat> ContractionSpace::basis_mod(const PrimeField& F) const {
    std::vector<std::vector<PrimeField::Elt>> rows = echelon_rows(slices_, F);
    if (static_cast<int>(rows.size()) != dim_)
        throw PreconditionError("contraction rank drops at this prime");
    std::vector<FpMat> basis;
    basis.reserve(rows.size());
    for (const auto& row : rows) {
        FpMat B(static_cast<std::size_t>(n_), std::vector<PrimeField::Elt>(static_cast<std::size_t>(n_)));
        for (int k = 0; k < n_; ++k)
            for (int l = 0; l < n_; ++l)
                B[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                    row[static_cast<std::size_t>(k * n_ + l)];
        basis.push_back(std::move(B));
    }
    return basis;
}

ContractionSpace contract(const Tensor& T, const PrimeField& F) {
    T.validate();
    int dim = static_cast<int>(echelon_rows(T.slices, F).size());
    // Guard against an unlucky prime: the true rank is the maximum over
    // independent good primes, and three agreeing draws certify it.
    SplitMix64 rng = derive_stream(F.modulus(), {hash_tag("contract-rank-check")});
    for (int extra = 0; extra < 2; ++extra) {
        PrimeField Q = random_prime(31, rng);
        dim = std::max(dim, static_cast<int>(echelon_rows(T.slices, Q).size()));
    }
    if (dim == 0) throw PreconditionError("empty contraction: zero tensor");
    ContractionSpace S(T.n, dim, T.slices);
    (void)S.basis_mod(F); // the construction prime must realize the full rank
    return S;
}

bool check_rank_precondition(const ContractionSpace& S, int trials, const PrimeField& F,
                             SplitMix64& rng) {
    const std::vector<FpMat> basis = S.basis_mod(F);
    const int n = S.n();
    for (int t = 0; t < trials; ++t) {
        FpMat M(static_cast<std::size_t>(n), std::vector<PrimeField::Elt>(static_cast<std::size_t>(n), 0));
        for (const FpMat& B : basis) {
            PrimeField::Elt c = F.random(rng);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    M[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                        F.add(M[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)],
                              F.mul(c, B[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]));
        }
        if (rank_mod_p(M, F) >= n - 2) return true;
    }
    return false;
}

Pencil Pencil::from_basis(const std::vector<FpMat>& basis, const PrimeField& F) {
    Pencil P;
    P.n = static_cast<int>(basis.at(0).size());
    P.nvars = static_cast<int>(basis.size());
    if (P.nvars > kMaxVars) throw LimitError("pencil: too many variables");
    P.entries.assign(static_cast<std::size_t>(P.n),
                     std::vector<MultiPoly>(static_cast<std::size_t>(P.n), MultiPoly(P.nvars)));
    PolyOps ops(F);
    for (int k = 0; k < P.n; ++k) {
        for (int l = 0; l < P.n; ++l) {
            std::vector<Term> terms;
            for (int j = 0; j < P.nvars; ++j) {
                PrimeField::Elt c = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]
                                         [static_cast<std::size_t>(l)];
                if (c != 0) terms.push_back(Term{monomial_var(j), c});
            }
            P.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                MultiPoly::from_terms(P.nvars, std::move(terms), F);
        }
    }
    return P;
}

const MultiPoly& MinorTable::minor(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    MultiPoly value(P_.nvars);
    if (rows == 0) {
        value = MultiPoly::constant(P_.nvars, 1);
    } else {
        // Laplace expansion along the first row of the subset.
        const int r0 = __builtin_ctz(rows);
        const std::uint32_t rrest = rows & (rows - 1);
        int sign = 0;
        for (std::uint32_t cm = cols; cm != 0; cm &= cm - 1) {
            const int c = __builtin_ctz(cm);
            const MultiPoly& e = P_.entries[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c)];
            if (!e.is_zero()) {
                const MultiPoly& sub = minor(rrest, cols & ~(1u << c));
                MultiPoly prod = ops_.mul(e, sub);
                value = (sign % 2 == 0) ? ops_.add(value, prod) : ops_.sub(value, prod);
            }
            ++sign;
        }
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

std::vector<MultiPoly> MinorTable::minors(int i) {
    if (i < 1 || i > P_.n) throw PreconditionError("minors: size out of range");
    std::vector<std::uint32_t> subsets;
    const std::uint32_t full = (1u << P_.n) - 1;
    for (std::uint32_t m = 0; m <= full; ++m)
        if (__builtin_popcount(m) == i) subsets.push_back(m);
    std::vector<MultiPoly> out;
    out.reserve(subsets.size() * subsets.size());
    for (std::uint32_t r : subsets)
        for (std::uint32_t c : subsets) out.push_back(minor(r, c));
    return out;
}

const MultiPoly& MinorTable::det() {
    const std::uint32_t full = (1u << P_.n) - 1;
    return minor(full, full);
}

std::vector<MultiPoly> gradient_components(MinorTable& table, const std::vector<FpMat>& directions,
                                           const PolyOps& ops) {
    const Pencil& P = table.pencil();
    const PrimeField& F = ops.field();
    const std::uint32_t full = (1u << P.n) - 1;
    std::vector<MultiPoly> out;
    out.reserve(directions.size());
    for (const FpMat& B : directions) {
        MultiPoly g(P.nvars);
        for (int k = 0; k < P.n; ++k) {
            for (int l = 0; l < P.n; ++l) {
                PrimeField::Elt c = B[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                if (c == 0) continue;
                if ((k + l) % 2 != 0) c = F.neg(c);
                const MultiPoly& cof = table.minor(full & ~(1u << k), full & ~(1u << l));
                g = ops.add(g, ops.scale(cof, c));
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace chrom
