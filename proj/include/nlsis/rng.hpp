#pragma once

#include <cstdint>
#include <random>

namespace nlsis {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of replica `index` under `master_seed`: the (index+1)-th output of a
/// SplitMix64 stream whose state starts at `master_seed`. Streams of distinct
/// replicas are independent of scheduling order.
constexpr std::uint64_t derive_replica_seed(std::uint64_t master_seed, std::uint64_t index) noexcept
{
    return mix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Uniform draw in [0, 1).
inline double uniform01(Rng& rng)
{
    double u = std::generate_canonical<double, 64>(rng);
    return u < 1.0 ? u : 0x1.fffffffffffffp-1;
}

/// Exponential draw with the given positive rate.
inline double exponential(Rng& rng, double rate)
{
    return std::exponential_distribution<double>(rate)(rng);
}

}  // namespace nlsis
