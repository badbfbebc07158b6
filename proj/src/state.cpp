#include "nlsis/state.hpp"

#include "nlsis/params.hpp"

#include <stdexcept>
#include <string>

namespace nlsis {

GeneralState GeneralState::all_susceptible(const Topology& topology)
{
    GeneralState s;
    s.infected_.assign(topology.vertex_count(), 0);
    s.infected_neighbors_.assign(topology.vertex_count(), 0);
    return s;
}

GeneralState GeneralState::from_infected(const Topology& topology, std::span<const std::size_t> infected)
{
    GeneralState s = all_susceptible(topology);
    for (std::size_t v : infected) {
        if (v >= topology.vertex_count())
            throw std::invalid_argument("initially infected vertex " + std::to_string(v) + " out of range");
        if (s.is_infected(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice as infected");
        s.infect(topology, v);
    }
    return s;
}

void GeneralState::infect(const Topology& topology, std::size_t v)
{
    infected_[v] = 1;
    ++infected_count_;
    topology.for_each_neighbor(v, [&](std::size_t u) { ++infected_neighbors_[u]; });
}

void GeneralState::heal(const Topology& topology, std::size_t v)
{
    infected_[v] = 0;
    --infected_count_;
    topology.for_each_neighbor(v, [&](std::size_t u) { --infected_neighbors_[u]; });
}

bool GeneralState::consistent_with(const Topology& topology) const
{
    if (infected_.size() != topology.vertex_count() || infected_neighbors_.size() != infected_.size())
        return false;
    std::size_t count = 0;
    for (std::size_t v = 0; v < infected_.size(); ++v) {
        if (infected_[v] > 1)
            return false;
        count += infected_[v];
        std::size_t n_v = 0;
        topology.for_each_neighbor(v, [&](std::size_t u) { n_v += infected_[u]; });
        if (n_v != infected_neighbors_[v])
            return false;
    }
    return count == infected_count_;
}

void validate_state(const CliqueChain& chain, const CliqueState& state)
{
    validate_vertex_count(chain.n, "clique size n");
    if (state.infected > chain.n)
        throw std::invalid_argument("initial infected count " + std::to_string(state.infected) +
                                    " exceeds clique size " + std::to_string(chain.n));
}

void validate_state(const StarChain& chain, const StarState& state)
{
    validate_vertex_count(chain.leaves, "star leaf count n");
    if (state.infected_leaves > chain.leaves)
        throw std::invalid_argument("initial infected leaf count " + std::to_string(state.infected_leaves) +
                                    " exceeds leaf count " + std::to_string(chain.leaves));
}

void validate_state(const Topology& topology, const GeneralState& state)
{
    if (!state.consistent_with(topology))
        throw std::invalid_argument("initial state is inconsistent with the topology");
}

}  // namespace nlsis
