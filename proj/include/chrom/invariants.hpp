#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chrom/groebner.hpp"
#include "chrom/tensor.hpp"

namespace chrom {

struct Limits {
    int n_max = 6;
    int d_max = 9;
    GroebnerConfig groebner;
};

struct TrialConfig {
    std::uint64_t seed = 0;
    int prime_bits = 31;
    int trials = 3;       // agreeing trials required for a count
    int max_trials = 6;   // total trial budget per coefficient
    int jobs = 0;         // 0 = hardware concurrency
    Limits limits;

    void validate() const;
};

/// Conditions b_1..b_{n-1}: entries[i] combinations of (i+1) x (i+1)
/// minors. Must sum to the projective dimension d.
struct BVector {
    std::vector<int> entries;
};

struct TrialRecord {
    std::uint64_t prime = 0;
    std::optional<std::uint64_t> count; // empty: system was not zero-dimensional
    GroebnerStats stats;
};

struct CoefficientReport {
    std::uint64_t value = 0;
    std::vector<TrialRecord> trials;
};

enum class InvariantKind { chromatic, relative, characteristic };

struct InvariantResult {
    InvariantKind kind = InvariantKind::chromatic;
    int n = 0;
    int d = 0;
    std::vector<std::uint64_t> m;              // m_0..m_d
    std::vector<CoefficientReport> reports;    // per coefficient diagnostics

    std::vector<std::uint64_t> binomial_form() const; // C(d,i)*m_i
    /// Display in the a/b basis, binomially weighted:
    /// "a^4 + 2*4 a^3 b + ... + 2 b^4".
    std::string polynomial_string() const;
    std::vector<std::uint64_t> primes_used() const;
    int trials_used() const;
};

std::uint64_t binomial(int n, int k);

/// Count of invertible matrices in the pencil satisfying the b-vector's
/// generic minor conditions; trial-stable over random primes.
std::uint64_t characteristic_number(const ContractionSpace& S, const BVector& b,
                                    const TrialConfig& cfg);

/// Same count with per-trial diagnostics.
CoefficientReport characteristic_number_report(const ContractionSpace& S, const BVector& b,
                                               const TrialConfig& cfg);

/// All coefficients m_i = T(b_1 = d-i, b_{n-1} = i): i conditions on the
/// inverse side, d-i generic hyperplane sections of the source.
InvariantResult chromatic(const ContractionSpace& S, const TrialConfig& cfg);

/// Multidegree of the graph of the gradient of det restricted to the
/// pencil; coefficients oriented as in `chromatic` (m'_0 = 1, m'_d =
/// degree of the gradient map).
InvariantResult relative_chromatic(const ContractionSpace& S, const TrialConfig& cfg);

struct EulerReport {
    std::int64_t complement = 0;    // sum (-1)^i m'_i
    std::int64_t hypersurface = 0;  // (d+1) - complement
    InvariantResult relative;
};

EulerReport euler_complement(const ContractionSpace& S, const TrialConfig& cfg);

struct ChromaticComparison {
    InvariantResult chromatic;
    InvariantResult relative;
    std::vector<int> differ_at;

    bool equal() const { return differ_at.empty(); }
};

ChromaticComparison compare_chromatic(const ContractionSpace& S, const TrialConfig& cfg);

namespace detail {

struct BuiltSystem {
    int nvars = 0;
    std::vector<MultiPoly> gens;
};

/// Literal system for a characteristic number: one random affine chart,
/// b_i random combinations of all i x i minors for each i, and the
/// saturation equation t*det(M(x)) - 1 with t as the last variable.
BuiltSystem build_charnum_system(const std::vector<FpMat>& basis, const std::vector<int>& b,
                                 const PrimeField& F, SplitMix64& rng);

/// System for the i-th relative coefficient: chart, (d-i) random linear
/// forms in x, i random combinations of the gradient components, and the
/// saturation s*(sum mu_j g_j) - 1 with independent mu.
BuiltSystem build_relative_system(const std::vector<FpMat>& basis, int target_conditions,
                                  const PrimeField& F, SplitMix64& rng);

struct SolveOptions {
    bool pre_eliminate = true; // substitute affine-linear generators first
    GroebnerConfig groebner;
    // Sugar selection runs first under this work budget; past it the run
    // is retried with the plain normal strategy (deterministic switch).
    std::uint64_t sugar_term_budget = 50'000'000;
};

/// Standard-monomial count of the system, or empty if it is not
/// zero-dimensional. Affine-linear generators are eliminated by exact
/// substitution before Buchberger runs.
std::optional<std::uint64_t> solve_count(const BuiltSystem& system, const PolyOps& ops,
                                         const SolveOptions& opts, GroebnerStats* stats = nullptr);

CoefficientReport run_coefficient(const ContractionSpace& S, InvariantKind kind,
                                  const std::vector<int>& b_or_index, int coeff_index,
                                  const TrialConfig& cfg);

/// Deterministic parallel map: runs fn(0..n-1) on `jobs` threads,
/// results and errors are reduced in index order.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

} // namespace detail

} // namespace chrom
