#pragma once

#include <cstdint>
#include <random>

namespace quboforge {

/// SplitMix64 step. Used to derive independent stream seeds from a master
/// seed so that restart r of a solver gets its own reproducible generator.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x1357'9BDF'2468'ACE0ull));
}

/// Deterministic random source. std::mt19937_64 is fully specified by the
/// standard, and all conversions below avoid std::uniform_*_distribution,
/// whose output is implementation-defined. Same seed, same stream, on any
/// platform.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool coin() { return (next() >> 63) != 0; }

    /// Uniform integer in [0, bound). Rejection-free modulo; bias is
    /// negligible for the small bounds used here and the result is
    /// platform-independent.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
    std::mt19937_64 engine_;
};

}  // namespace quboforge
