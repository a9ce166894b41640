#pragma once

#include <cstdint>
#include <initializer_list>

namespace chrom {

/// SplitMix64 generator. Every random draw in the project flows through
/// this class, seeded by a deterministic key chain, so identical
/// (seed, config) inputs replay identical computations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) via rejection. n must be nonzero.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

private:
    std::uint64_t state_;
};

/// FNV-1a, used to turn short tag strings into stream keys.
constexpr std::uint64_t hash_tag(const char* s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ULL;
    return h;
}

/// Counter-based split: one global seed fans out into independent
/// streams keyed by (tag, indices...). The derived stream depends only
/// on the key chain, never on draw order elsewhere.
inline SplitMix64 derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    SplitMix64 g(seed);
    std::uint64_t s = g.next();
    for (std::uint64_t k : keys) {
        SplitMix64 h(s ^ (k + 0x9e3779b97f4a7c15ULL));
        s = h.next();
    }
    return SplitMix64(s);
}

} // namespace chrom
