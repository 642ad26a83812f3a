#pragma once

#include <cstdint>

namespace riglab {

// 64-bit finalizer (splitmix64's mixing function). Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based generator: the state is a counter advanced by the golden-ratio
// stride and every output is mix64(counter). Output depends only on (seed,
// number of draws), so a stream can be reproduced from its seed alone.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

    // Uniform in [0, bound), unbiased (Lemire's multiply-shift with rejection).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        while (true) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (0ULL - bound) % bound)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

  private:
    std::uint64_t state_;
};

// Seed with a documented derivation rule:
//   child(i) has base' = mix64(base ^ (0x9E3779B97F4A7C15 * (i + 1)))
// Distinct indices give distinct bases for a fixed parent, so trial i of a
// batch is reproducible from (base, i) regardless of execution order or
// worker count. Nested derivations chain the same rule.
struct Seed {
    std::uint64_t base = 0;

    Seed child(std::uint64_t index) const {
        return Seed{mix64(base ^ (0x9E3779B97F4A7C15ULL * (index + 1)))};
    }

    Rng rng() const { return Rng(mix64(base)); }
};

}  // namespace riglab
