#pragma once

#include "nlsis/dynamics.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nlsis {

struct CoupledPoint {
    double time;
    std::size_t lo;
    std::size_t hi;
};

struct CoupledRun {
    std::vector<CoupledPoint> trajectory;  // initial pair, then every event that moved either chain
    SurvivalOutcome lo;
    SurvivalOutcome hi;
};

/// Two lumped clique chains driven by one uniformized event stream.
///
/// Events arrive at rate Lambda = n + lambda_hi * n^(1+alpha) * n. With a
/// shared uniform U in [0, Lambda) a chain at I moves up if U < b(I) and down
/// if U >= Lambda - I. The nested thresholds keep I_lo <= I_hi at all times.
/// `limits.max_jumps` counts uniformized events, self-loops included.
CoupledRun coupled_simulate_clique(std::size_t n, const ProcessParams& lo, const ProcessParams& hi,
                                   std::size_t initial_lo, std::size_t initial_hi, std::uint64_t seed,
                                   const Limits& limits);

/// Trajectory points with I_lo > I_hi, plus one if the lower chain outlived
/// the upper one.
std::size_t count_domination_violations(const CoupledRun& run);

}  // namespace nlsis
