#pragma once

// Small seeded generators for property tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    std::size_t index(std::size_t lo, std::size_t hi)  // inclusive
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::uint64_t bits() { return rng_(); }

    /// Random simple undirected graph on `n` vertices.
    std::vector<std::vector<std::size_t>> graph(std::size_t n, double density)
    {
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (coin(density)) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
        for (auto& list : adj)
            std::shuffle(list.begin(), list.end(), rng_);
        return adj;
    }

    std::vector<std::size_t> subset(std::size_t n, std::size_t count)
    {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = i;
        std::shuffle(all.begin(), all.end(), rng_);
        all.resize(std::min(count, n));
        return all;
    }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        std::shuffle(v.begin(), v.end(), rng_);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
