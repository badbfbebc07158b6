#include "nlsis/process.hpp"

#include <stdexcept>

namespace nlsis {

CliqueRates::CliqueRates(std::size_t n, const ProcessParams& params) : n_(n), up_(n + 1, 0.0)
{
    validate_vertex_count(n, "clique size n");
    for (std::size_t i = 1; i < n; ++i)
        up_[i] = infection_rate(params, i) * static_cast<double>(n - i);
}

StarRates::StarRates(std::size_t leaves, const ProcessParams& params)
    : leaves_(leaves), lambda_(params.lambda()), center_infect_(leaves + 1, 0.0)
{
    validate_vertex_count(leaves, "star leaf count n");
    for (std::size_t i = 1; i <= leaves; ++i)
        center_infect_[i] = infection_rate(params, i);
}

CliqueProcess::CliqueProcess(const CliqueRates& rates, std::size_t initial_infected)
    : rates_(&rates), infected_(initial_infected), peak_(initial_infected)
{
    validate_state(CliqueChain{rates.n()}, CliqueState{initial_infected});
}

std::optional<EventKind> CliqueProcess::advance(Rng& rng, double t_max)
{
    const double up = rates_->up(infected_);
    const double total = up + rates_->down(infected_);
    const double next = time_ + exponential(rng, total);
    if (next > t_max) {
        time_ = t_max;
        return std::nullopt;
    }
    time_ = next;
    ++jumps_;
    if (uniform01(rng) * total < up) {
        ++infected_;
        peak_ = std::max(peak_, infected_);
        return EventKind::infect;
    }
    --infected_;
    return EventKind::heal;
}

StarProcess::StarProcess(const StarRates& rates, const StarState& init)
    : rates_(&rates), infected_(init.infected_leaves), center_(init.center_infected),
      peak_(init.infected_leaves + (init.center_infected ? 1 : 0))
{
    validate_state(StarChain{rates.leaves()}, init);
}

std::optional<EventKind> StarProcess::advance(Rng& rng, double t_max)
{
    // Event order inside the categorical pick: leaf infection, leaf heal,
    // center transition.
    const double leaf_up = center_ ? rates_->leaf_infect(infected_) : 0.0;
    const double leaf_down = static_cast<double>(infected_);
    const double center_rate = center_ ? 1.0 : rates_->center_infect(infected_);
    const double total = leaf_up + leaf_down + center_rate;
    const double next = time_ + exponential(rng, total);
    if (next > t_max) {
        time_ = t_max;
        return std::nullopt;
    }
    time_ = next;
    ++jumps_;
    const double u = uniform01(rng) * total;
    EventKind kind;
    if (u < leaf_up) {
        ++infected_;
        kind = EventKind::infect;
    } else if (u < leaf_up + leaf_down) {
        --infected_;
        kind = EventKind::heal;
    } else {
        center_ = !center_;
        kind = center_ ? EventKind::center_infect : EventKind::center_heal;
    }
    peak_ = std::max(peak_, infected_ + (center_ ? 1 : 0));
    return kind;
}

SurvivalOutcome simulate_clique_lumped(std::size_t n, const ProcessParams& params, std::size_t initial_infected,
                                       std::uint64_t seed, const Limits& limits, const JumpObserver& observer)
{
    validate(limits);
    const CliqueRates rates(n, params);
    CliqueProcess process(rates, initial_infected);
    Rng rng(seed);
    const RunEnd end = run_process(process, rng, limits, observer);
    return make_outcome(process, end, seed);
}

SurvivalOutcome simulate_star_lumped(std::size_t leaves, const ProcessParams& params, const StarState& init,
                                     std::uint64_t seed, const Limits& limits, const JumpObserver& observer)
{
    validate(limits);
    const StarRates rates(leaves, params);
    StarProcess process(rates, init);
    Rng rng(seed);
    const RunEnd end = run_process(process, rng, limits, observer);
    return make_outcome(process, end, seed);
}

}  // namespace nlsis
