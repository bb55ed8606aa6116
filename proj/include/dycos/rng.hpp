#pragma once

#include <cstdint>
#include <random>

namespace dycos {

// Seeded generator with explicit draw primitives, so the hop sequence is
// fully determined by this file and the seed rather than by whatever the
// standard library's distributions do on a given platform.
//
// The seed is kept alongside the engine state: fork(a, b) derives an
// independent child stream from (seed, a, b) without advancing this one.
// Classification derives one stream per (node, walk) that way, which makes
// results independent of processing order and thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., n-1}, unbiased (Lemire multiply-shift with rejection).
    std::size_t next_index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        std::uint64_t x = engine_();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = engine_();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::size_t>(m >> 64);
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Child stream keyed by (a, b); const so a master stream can be shared
    // read-only across workers.
    Rng fork(std::uint64_t a, std::uint64_t b) const {
        return Rng(mix(mix(seed_, a ^ 0x5bf0'3635'dcd1'd06bULL), b ^ 0x2545'f491'4f6c'dd1dULL));
    }

    // SplitMix64 finalizer over (state + key); avalanches every input bit.
    static std::uint64_t mix(std::uint64_t state, std::uint64_t key) {
        std::uint64_t z = state + 0x9e37'79b9'7f4a'7c15ULL * (key + 1);
        z = (z ^ (z >> 30)) * 0xbf58'476d'1ce4'e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d0'49bb'1331'11ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace dycos
