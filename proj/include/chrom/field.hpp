#pragma once

#include <cstdint>

#include "chrom/errors.hpp"
#include "chrom/rng.hpp"

namespace chrom {

/// Deterministic Miller-Rabin, valid for every 64-bit integer.
bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a runtime prime p < 2^31. Elements are stored
/// as canonical representatives in [0, p), so products fit in 64 bits.
class PrimeField {
public:
    using Elt = std::uint32_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Elt add(Elt a, Elt b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        if (s >= p_) s -= p_;
        return static_cast<Elt>(s);
    }

    Elt sub(Elt a, Elt b) const {
        return a >= b ? a - b : static_cast<Elt>(a + p_ - b);
    }

    Elt neg(Elt a) const { return a == 0 ? 0 : static_cast<Elt>(p_ - a); }

    Elt mul(Elt a, Elt b) const {
        return static_cast<Elt>((std::uint64_t{a} * b) % p_);
    }

    Elt pow(Elt base, std::uint64_t e) const;

    /// Multiplicative inverse by extended Euclid. Throws on zero.
    Elt inv(Elt a) const;

    /// Canonical representative of an arbitrary signed integer.
    Elt from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<Elt>(r);
    }

    Elt one() const { return 1; }

    Elt random(SplitMix64& rng) const {
        return static_cast<Elt>(rng.next_below(p_));
    }

    Elt random_nonzero(SplitMix64& rng) const {
        return static_cast<Elt>(1 + rng.next_below(p_ - 1));
    }

private:
    std::uint64_t p_;
};

/// Uniformly sampled prime with the requested bit length (30 or 31).
/// Deterministic given the rng state; resamples until prime.
PrimeField random_prime(int bits, SplitMix64& rng);

} // namespace chrom
