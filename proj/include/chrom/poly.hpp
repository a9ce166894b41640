#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chrom/field.hpp"

namespace chrom {

/// Hard ceiling on ambient variables (pencil coordinates plus auxiliary
/// saturation variables). Instances here never need more than ~13.
inline constexpr int kMaxVars = 16;

/// Dense exponent vector with cached total degree. Slots past the ambient
/// variable count stay zero, so fixed-width loops are safe everywhere.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

/// Graded reverse lexicographic order: compare total degree, then the
/// exponent difference at the last position where they differ (smaller
/// last exponent wins). Returns <0, 0, >0 as m1 <, =, > m2.
inline int grevlex_compare(const Monomial& m1, const Monomial& m2) {
    if (m1.deg != m2.deg) return m1.deg < m2.deg ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (m1.e[i] != m2.e[i]) return m1.e[i] < m2.e[i] ? 1 : -1;
    }
    return 0;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b); // requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_one();
Monomial monomial_var(int v, int exp = 1);

struct Term {
    Monomial m;
    PrimeField::Elt c = 0;
};

/// Sparse multivariate polynomial over F_p. Terms are kept strictly
/// decreasing in grevlex with no zero coefficients, so the leading term
/// is always terms[0].
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, PrimeField::Elt c);
    static MultiPoly variable(int nvars, int v);
    /// Builds from an arbitrary term list: sorts, merges, drops zeros.
    static MultiPoly from_terms(int nvars, std::vector<Term> terms, const PrimeField& F);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.deg == 0; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_[0]; }
    std::uint32_t degree() const { return terms_.empty() ? 0 : terms_[0].m.deg; }

    std::string str() const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;

    friend class PolyOps;
};

/// Arithmetic on MultiPoly bound to one prime field.
class PolyOps {
public:
    explicit PolyOps(const PrimeField& F) : F_(F) {}

    const PrimeField& field() const { return F_; }

    MultiPoly add(const MultiPoly& f, const MultiPoly& g) const;
    MultiPoly sub(const MultiPoly& f, const MultiPoly& g) const;
    MultiPoly scale(const MultiPoly& f, PrimeField::Elt c) const;
    MultiPoly mul(const MultiPoly& f, const MultiPoly& g) const;
    MultiPoly mul_term(const MultiPoly& f, const Monomial& m, PrimeField::Elt c) const;

    /// f - c*m*g, the reduction step. Skips the cancelled leading term of
    /// f when `drop_lead` is set.
    MultiPoly sub_mul(const MultiPoly& f, PrimeField::Elt c, const Monomial& m,
                      const MultiPoly& g, bool drop_lead = false) const;

    MultiPoly monic(const MultiPoly& f) const;
    MultiPoly partial_derivative(const MultiPoly& f, int v) const;

    /// Substitutes polynomial q for variable v (Horner on the v-degree).
    MultiPoly substitute(const MultiPoly& f, int v, const MultiPoly& q) const;

    /// Rebuilds f over a smaller ring: keep[i] is the new index of old
    /// variable i, or -1 if the variable no longer occurs.
    MultiPoly remap(const MultiPoly& f, const std::vector<int>& keep, int new_nvars) const;

    PrimeField::Elt evaluate(const MultiPoly& f, const std::vector<PrimeField::Elt>& point) const;

private:
    const PrimeField& F_;
};

} // namespace chrom
