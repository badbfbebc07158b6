#pragma once

#include "nlsis/topology.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace nlsis {

/// Lumped clique chain over the infected count I in 0..n.
struct CliqueChain {
    std::size_t n;
};

/// Lumped star chain over (infected leaves I in 0..n, center flag).
struct StarChain {
    std::size_t leaves;
};

struct CliqueState {
    std::size_t infected;
    friend bool operator==(const CliqueState&, const CliqueState&) = default;
};

struct StarState {
    std::size_t infected_leaves;
    bool center_infected;
    friend bool operator==(const StarState&, const StarState&) = default;
};

/// Infected set on an explicit topology plus the incrementally maintained
/// number of infected neighbours N_v of every vertex.
class GeneralState {
public:
    GeneralState() = default;

    static GeneralState all_susceptible(const Topology& topology);
    static GeneralState from_infected(const Topology& topology, std::span<const std::size_t> infected);

    std::size_t vertex_count() const noexcept { return infected_.size(); }
    bool is_infected(std::size_t v) const { return infected_[v] != 0; }
    std::size_t infected_neighbors(std::size_t v) const { return infected_neighbors_[v]; }
    std::size_t infected_count() const noexcept { return infected_count_; }

    void infect(const Topology& topology, std::size_t v);
    void heal(const Topology& topology, std::size_t v);

    /// Recounts every N_v from scratch and compares with the incremental values.
    bool consistent_with(const Topology& topology) const;

    friend bool operator==(const GeneralState&, const GeneralState&) = default;

private:
    std::vector<std::uint8_t> infected_;
    std::vector<std::size_t> infected_neighbors_;
    std::size_t infected_count_ = 0;
};

using ProcessState = std::variant<GeneralState, CliqueState, StarState>;

void validate_state(const CliqueChain& chain, const CliqueState& state);
void validate_state(const StarChain& chain, const StarState& state);
void validate_state(const Topology& topology, const GeneralState& state);

}  // namespace nlsis
