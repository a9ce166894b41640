#include "chrom/field.hpp"

namespace chrom {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is a proven deterministic witness set for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
        throw PreconditionError("PrimeField: modulus must be a prime below 2^31");
}

PrimeField::Elt PrimeField::pow(Elt base, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    std::uint64_t b = base;
    while (e) {
        if (e & 1) r = (r * b) % p_;
        b = (b * b) % p_;
        e >>= 1;
    }
    return static_cast<Elt>(r);
}

PrimeField::Elt PrimeField::inv(Elt a) const {
    if (a == 0) throw PreconditionError("PrimeField: division by zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elt>(t);
}

PrimeField random_prime(int bits, SplitMix64& rng) {
    if (bits < 30 || bits > 31)
        throw PreconditionError("random_prime: bit length must be 30 or 31");
    const std::uint64_t lo = 1ULL << (bits - 1);
    for (;;) {
        std::uint64_t c = lo + rng.next_below(lo);
        c |= 1;
        if (is_prime(c)) return PrimeField(c);
    }
}

} // namespace chrom
