#pragma once

#include "nlsis/params.hpp"
#include "nlsis/state.hpp"

#include <cstddef>

namespace nlsis {

inline constexpr std::size_t kMaxExactStates = 10000;

enum class SolveMethod {
    automatic,   // structured; it has no cancellation when survival times are huge
    dense,       // LU with partial pivoting on the full first-step system; loses
                 // relative accuracy as the expected time grows
    structured,  // birth-death recursion (clique) or block-tridiagonal elimination (star)
};

/// Expected survival time of the lumped chain from `init`, from the
/// first-step equations tau(s) = 1/R(s) + sum_e P(e|s) tau(s_e) with
/// tau = 0 in the absorbing state.
double expected_survival_exact_small(const CliqueChain& chain, const ProcessParams& params, const CliqueState& init,
                                     SolveMethod method = SolveMethod::automatic);
double expected_survival_exact_small(const StarChain& chain, const ProcessParams& params, const StarState& init,
                                     SolveMethod method = SolveMethod::automatic);

}  // namespace nlsis
