#pragma once

#include <cstdint>

namespace plb {

// splitmix64 finalizer (Steele/Lea/Vigna). Bijective, good avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Small counter-based PRNG. All generators in this toolkit consume
// randomness through one of these, so a (params, seed) pair maps to
// exactly one output graph on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // uniform double in [0, 1), 53 bits
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n), unbiased (Lemire with rejection)
    std::uint64_t next_below(std::uint64_t n) {
        if (n < 2) return 0;
        while (true) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo >= n || lo >= (-n) % n) return static_cast<std::uint64_t>(m >> 64);
        }
    }

private:
    std::uint64_t state_;
};

// Independent sub-streams from one user seed. Positions and edge decisions
// use different streams so positions are re-derivable without sampling edges.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) + stream));
}

namespace stream {
inline constexpr std::uint64_t positions = 1;
inline constexpr std::uint64_t edges = 2;
inline constexpr std::uint64_t pairing = 3;
inline constexpr std::uint64_t retry_base = 1000;
}  // namespace stream

}  // namespace plb
