#pragma once

#include "nlsis/params.hpp"
#include "nlsis/rng.hpp"
#include "nlsis/state.hpp"
#include "nlsis/topology.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace nlsis {

/// What a single clock trigger does. On stars the center's transitions are
/// reported separately from leaf transitions.
enum class EventKind { infect, heal, center_infect, center_heal };

std::string_view to_string(EventKind kind);

struct Event {
    EventKind kind;
    std::optional<std::size_t> vertex;  // set for explicit topologies only
    double rate;
};

struct RateSummary {
    double heal_total = 0.0;
    double infect_total = 0.0;
    std::vector<Event> events;  // every event with positive rate

    double total() const noexcept { return heal_total + infect_total; }
};

RateSummary total_rates(const Topology& topology, const GeneralState& state, const ProcessParams& params);
RateSummary total_rates(const CliqueChain& chain, const CliqueState& state, const ProcessParams& params);
RateSummary total_rates(const StarChain& chain, const StarState& state, const ProcessParams& params);

struct JumpProbability {
    EventKind kind;
    std::optional<std::size_t> vertex;
    double probability;
};

/// Distribution of the next event of the embedded jump chain. Throws
/// std::domain_error in the absorbing state.
std::vector<JumpProbability> embedded_jump_probabilities(const Topology& topology, const GeneralState& state,
                                                         const ProcessParams& params);
std::vector<JumpProbability> embedded_jump_probabilities(const CliqueChain& chain, const CliqueState& state,
                                                         const ProcessParams& params);
std::vector<JumpProbability> embedded_jump_probabilities(const StarChain& chain, const StarState& state,
                                                         const ProcessParams& params);

/// Both limits are mandatory; super-critical runs are otherwise unbounded.
struct Limits {
    double t_max;
    std::uint64_t max_jumps;
};

void validate(const Limits& limits);

enum class Censoring { none, time_limit, jump_limit };

std::string_view to_string(Censoring censoring);

struct SurvivalOutcome {
    double time = 0.0;  // survival time, or the time at which the run was cut
    Censoring censored = Censoring::none;
    std::uint64_t jumps = 0;
    std::size_t peak_infected = 0;
    std::uint64_t seed = 0;

    bool is_censored() const noexcept { return censored != Censoring::none; }
    friend bool operator==(const SurvivalOutcome&, const SurvivalOutcome&) = default;
};

/// One row of a trajectory. On stars `infected_count` counts infected leaves
/// and `center_infected` is set; elsewhere it is the total infected count.
struct JumpRecord {
    std::uint64_t index;
    double time;
    EventKind kind;
    std::size_t infected_count;
    std::optional<bool> center_infected;
};

using JumpObserver = std::function<void(const JumpRecord&)>;

/// Gillespie direct-method simulation on an explicit topology (cliques and
/// stars are simulated vertex by vertex here, not lumped).
SurvivalOutcome simulate(const Topology& topology, const ProcessParams& params, const GeneralState& init,
                         std::uint64_t seed, const Limits& limits, const JumpObserver& observer = {});

/// Birth-death chain I -> I+1 at lambda I^(1+alpha) (n-I), I -> I-1 at I.
SurvivalOutcome simulate_clique_lumped(std::size_t n, const ProcessParams& params, std::size_t initial_infected,
                                       std::uint64_t seed, const Limits& limits, const JumpObserver& observer = {});

/// Two-layer star chain over (infected leaves, center flag).
SurvivalOutcome simulate_star_lumped(std::size_t leaves, const ProcessParams& params, const StarState& init,
                                     std::uint64_t seed, const Limits& limits, const JumpObserver& observer = {});

}  // namespace nlsis
