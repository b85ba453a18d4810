#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ramsey {

/// SplitMix64 finalizer (Steele, Lea & Flood).
std::uint64_t splitmix64(std::uint64_t x);

/// Derives a child seed: h = master; for each key k, h = splitmix64(h ^ splitmix64(k + 0x9e3779b97f4a7c15)).
/// Used for every per-trial and per-cell seed so results never depend on
/// scheduling.
std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys);

/// mt19937_64 seeded with splitmix64(seed), plus portable conversions
/// (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [0, bound), unbiased.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

} // namespace ramsey
