#pragma once

#include "nlsis/dynamics.hpp"
#include "nlsis/replicas.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace nlsis {

struct McConfig {
    std::size_t runs = 0;
    double t_max = 0.0;
    std::uint64_t max_jumps = 0;
    std::uint64_t master_seed = 0;
    double confidence = 0.95;
};

void validate(const McConfig& mc);

/// Monte Carlo summary over replicas. Times are censored at t_max, so
/// `mean_censored` is the mean of min(T, t_max).
struct SurvivalStats {
    double mean_censored = 0.0;
    double median = 0.0;
    bool median_beyond_censor = false;  // the median run was censored
    double q10 = 0.0;
    double q50 = 0.0;
    double q90 = 0.0;
    double censored_fraction = 0.0;
    double ci_halfwidth = 0.0;  // normal approximation at the configured confidence
    std::size_t runs = 0;
    std::uint64_t master_seed = 0;
    double t_max = 0.0;

    friend bool operator==(const SurvivalStats&, const SurvivalStats&) = default;
};

/// gillespie steps every event; exact_fast uses the level-wise clique sampler
/// or the phase-wise star sampler, which ignore max_jumps.
enum class Engine { gillespie, exact_fast };

/// One outcome per replica, stored at its replica index.
std::vector<SurvivalOutcome> run_replicas(const Topology& topology, const ProcessParams& params,
                                          const GeneralState& init, const McConfig& mc,
                                          Execution execution = Execution::parallel);
std::vector<SurvivalOutcome> run_replicas(const CliqueChain& chain, const ProcessParams& params,
                                          const CliqueState& init, const McConfig& mc,
                                          Engine engine = Engine::gillespie,
                                          Execution execution = Execution::parallel);
std::vector<SurvivalOutcome> run_replicas(const StarChain& chain, const ProcessParams& params, const StarState& init,
                                          const McConfig& mc, Engine engine = Engine::gillespie,
                                          Execution execution = Execution::parallel);

/// Order-independent: the outcomes are sorted before any reduction.
SurvivalStats aggregate(std::span<const SurvivalOutcome> outcomes, double t_max, std::uint64_t master_seed,
                        double confidence);

/// The same runs as seen with a smaller censoring time.
std::vector<SurvivalOutcome> recensor(std::span<const SurvivalOutcome> outcomes, double t_max);

SurvivalStats estimate_survival(const Topology& topology, const ProcessParams& params, const GeneralState& init,
                                const McConfig& mc, Execution execution = Execution::parallel);
SurvivalStats estimate_survival(const CliqueChain& chain, const ProcessParams& params, const CliqueState& init,
                                const McConfig& mc, Engine engine = Engine::gillespie,
                                Execution execution = Execution::parallel);
SurvivalStats estimate_survival(const StarChain& chain, const ProcessParams& params, const StarState& init,
                                const McConfig& mc, Engine engine = Engine::gillespie,
                                Execution execution = Execution::parallel);

struct Interval {
    double low;
    double high;
};

Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence);

struct ProbabilityEstimate {
    double estimate = 0.0;
    Interval ci{0.0, 0.0};
    std::size_t hits = 0;
    std::size_t runs = 0;
};

/// Fraction of runs that reach a state satisfying `target` before absorption
/// or censoring. A target satisfied by the initial state counts as hit.
ProbabilityEstimate estimate_hitting_probability(const CliqueChain& chain, const ProcessParams& params,
                                                 const CliqueState& init,
                                                 const std::function<bool(const CliqueState&)>& target,
                                                 const McConfig& mc, Execution execution = Execution::parallel);
ProbabilityEstimate estimate_hitting_probability(const StarChain& chain, const ProcessParams& params,
                                                 const StarState& init,
                                                 const std::function<bool(const StarState&)>& target,
                                                 const McConfig& mc, Execution execution = Execution::parallel);

/// Center-healthy phase started at `from` infected leaves: success if the
/// count drops to `to` or below before the center is reinfected.
struct CenterHealthyDrop {
    std::size_t from;
    std::size_t to;
};

/// Center-infected phase started at `start` infected leaves: success if the
/// count rises by ceil(lambda n / (4 z)) before the center heals.
struct CenterInfectedRise {
    std::size_t start;
    double z;
};

std::size_t rise_target(std::size_t leaves, double lambda, double z);

ProbabilityEstimate estimate_phase_event(const StarChain& chain, const ProcessParams& params,
                                         const CenterHealthyDrop& phase, const McConfig& mc,
                                         Execution execution = Execution::parallel);
ProbabilityEstimate estimate_phase_event(const StarChain& chain, const ProcessParams& params,
                                         const CenterInfectedRise& phase, const McConfig& mc,
                                         Execution execution = Execution::parallel);

}  // namespace nlsis
