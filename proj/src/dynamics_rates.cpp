#include "nlsis/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace nlsis {

std::string_view to_string(EventKind kind)
{
    switch (kind) {
    case EventKind::infect: return "infect";
    case EventKind::heal: return "heal";
    case EventKind::center_infect: return "center_infect";
    case EventKind::center_heal: return "center_heal";
    }
    return "unknown";
}

std::string_view to_string(Censoring censoring)
{
    switch (censoring) {
    case Censoring::none: return "none";
    case Censoring::time_limit: return "time_limit";
    case Censoring::jump_limit: return "jump_limit";
    }
    return "unknown";
}

void validate(const Limits& limits)
{
    if (!(limits.t_max > 0.0) || std::isnan(limits.t_max))
        throw std::invalid_argument("t_max must be > 0");
    if (limits.max_jumps < 1)
        throw std::invalid_argument("max_jumps must be >= 1");
}

RateSummary total_rates(const Topology& topology, const GeneralState& state, const ProcessParams& params)
{
    if (state.vertex_count() != topology.vertex_count())
        throw std::invalid_argument("state does not match topology size");
    RateSummary out;
    for (std::size_t v = 0; v < topology.vertex_count(); ++v) {
        const bool center = topology.is_star_center(v);
        if (state.is_infected(v)) {
            out.heal_total += 1.0;
            out.events.push_back({center ? EventKind::center_heal : EventKind::heal, v, 1.0});
        } else {
            const double r = infection_rate(params, state.infected_neighbors(v));
            if (r > 0.0) {
                out.infect_total += r;
                out.events.push_back({center ? EventKind::center_infect : EventKind::infect, v, r});
            }
        }
    }
    return out;
}

RateSummary total_rates(const CliqueChain& chain, const CliqueState& state, const ProcessParams& params)
{
    validate_state(chain, state);
    RateSummary out;
    const double up = infection_rate(params, state.infected) * static_cast<double>(chain.n - state.infected);
    const double down = static_cast<double>(state.infected);
    out.infect_total = up;
    out.heal_total = down;
    if (up > 0.0)
        out.events.push_back({EventKind::infect, std::nullopt, up});
    if (down > 0.0)
        out.events.push_back({EventKind::heal, std::nullopt, down});
    return out;
}

RateSummary total_rates(const StarChain& chain, const StarState& state, const ProcessParams& params)
{
    validate_state(chain, state);
    RateSummary out;
    const double leaves_healing = static_cast<double>(state.infected_leaves);
    if (state.center_infected) {
        const double leaf_up = params.lambda() * static_cast<double>(chain.leaves - state.infected_leaves);
        out.infect_total = leaf_up;
        out.heal_total = leaves_healing + 1.0;
        if (leaf_up > 0.0)
            out.events.push_back({EventKind::infect, std::nullopt, leaf_up});
        if (leaves_healing > 0.0)
            out.events.push_back({EventKind::heal, std::nullopt, leaves_healing});
        out.events.push_back({EventKind::center_heal, std::nullopt, 1.0});
    } else {
        const double center_up = infection_rate(params, state.infected_leaves);
        out.infect_total = center_up;
        out.heal_total = leaves_healing;
        if (leaves_healing > 0.0)
            out.events.push_back({EventKind::heal, std::nullopt, leaves_healing});
        if (center_up > 0.0)
            out.events.push_back({EventKind::center_infect, std::nullopt, center_up});
    }
    return out;
}

namespace {

std::vector<JumpProbability> normalize(const RateSummary& rates)
{
    const double total = rates.total();
    if (!(total > 0.0))
        throw std::domain_error("absorbing state: no event has positive rate");
    std::vector<JumpProbability> out;
    out.reserve(rates.events.size());
    for (const Event& e : rates.events)
        out.push_back({e.kind, e.vertex, e.rate / total});
    return out;
}

}  // namespace

std::vector<JumpProbability> embedded_jump_probabilities(const Topology& topology, const GeneralState& state,
                                                         const ProcessParams& params)
{
    return normalize(total_rates(topology, state, params));
}

std::vector<JumpProbability> embedded_jump_probabilities(const CliqueChain& chain, const CliqueState& state,
                                                         const ProcessParams& params)
{
    return normalize(total_rates(chain, state, params));
}

std::vector<JumpProbability> embedded_jump_probabilities(const StarChain& chain, const StarState& state,
                                                         const ProcessParams& params)
{
    return normalize(total_rates(chain, state, params));
}

}  // namespace nlsis
