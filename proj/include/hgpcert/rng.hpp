#pragma once

#include <cstdint>

namespace hgpcert {

/// SplitMix64 (Steele/Lea/Vigna). Pinned by algorithm rather than taken
/// from <random> so seeded runs reproduce bit-for-bit on every platform
/// and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    bool next_bit() { return next_u64() >> 63; }

    /// Uniform in [0, n), n >= 1. Rejection sampling keeps it unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    /// Derives an independent stream seed; used to make per-sample state a
    /// function of (seed, index) alone, independent of evaluation order.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        return r.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace hgpcert
