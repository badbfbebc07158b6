#pragma once

// Exact samplers of the survival time that avoid stepping through every
// event. Both are distribution-identical to the lumped Gillespie chains for
// the survival time and the censoring flag; see the notes on each for which
// other outcome fields are exact.

#include "nlsis/dynamics.hpp"

#include <cstddef>
#include <cstdint>

namespace nlsis {

/// Clique birth-death chain sampled level by level.
///
/// Down-crossings of level i equal up-crossings of level i-1 plus one if
/// i <= I0. Given them, the ups taken from i are negative binomial and the
/// time spent at i is Gamma(visits, rate). Levels are processed from the
/// bottom and the run stops as soon as the accumulated time passes `t_max`.
///
/// `jumps` is exact for absorbed runs and a lower bound for censored ones;
/// `peak_infected` is exact for absorbed runs.
SurvivalOutcome sample_clique_survival_levelwise(std::size_t n, const ProcessParams& params,
                                                 std::size_t initial_infected, std::uint64_t seed, double t_max);

/// Star chain sampled phase by phase. While the center is infected the
/// leaves are independent two-state chains, so the phase (an Exp(1) span)
/// is resolved with two binomial draws. Center-healthy phases are stepped
/// event by event.
///
/// `jumps` counts the observed net leaf changes plus center transitions and
/// is a lower bound; `peak_infected` is taken at phase boundaries only.
SurvivalOutcome sample_star_survival_phased(std::size_t leaves, const ProcessParams& params, const StarState& init,
                                            std::uint64_t seed, double t_max);

}  // namespace nlsis
