#include "nlsis/process.hpp"

#include <stdexcept>

namespace nlsis {

GeneralProcess::GeneralProcess(const Topology& topology, const ProcessParams& params, GeneralState init)
    : topology_(&topology), state_(std::move(init)), tree_(topology.vertex_count()), peak_(state_.infected_count())
{
    validate_state(topology, state_);
    rate_by_count_.resize(topology.max_degree() + 1);
    for (std::size_t k = 0; k < rate_by_count_.size(); ++k)
        rate_by_count_[k] = infection_rate(params, k);
    for (std::size_t v = 0; v < topology.vertex_count(); ++v)
        refresh(v);
}

void GeneralProcess::refresh(std::size_t v)
{
    tree_.set(v, state_.is_infected(v) ? 1.0 : rate_by_count_[state_.infected_neighbors(v)]);
}

std::optional<EventKind> GeneralProcess::advance(Rng& rng, double t_max)
{
    const double total = tree_.total();
    const double next = time_ + exponential(rng, total);
    if (next > t_max) {
        time_ = t_max;
        return std::nullopt;
    }
    time_ = next;
    ++jumps_;
    const std::size_t v = tree_.find(uniform01(rng) * total);
    const bool center = topology_->is_star_center(v);
    EventKind kind;
    if (state_.is_infected(v)) {
        state_.heal(*topology_, v);
        kind = center ? EventKind::center_heal : EventKind::heal;
    } else {
        state_.infect(*topology_, v);
        kind = center ? EventKind::center_infect : EventKind::infect;
        peak_ = std::max(peak_, state_.infected_count());
    }
    refresh(v);
    topology_->for_each_neighbor(v, [&](std::size_t u) {
        if (!state_.is_infected(u))
            refresh(u);
    });
    return kind;
}

JumpRecord GeneralProcess::record(EventKind kind) const
{
    if (topology_->kind() == TopologyKind::star) {
        const bool center = state_.is_infected(topology_->center());
        return {jumps_, time_, kind, state_.infected_count() - (center ? 1 : 0), center};
    }
    return {jumps_, time_, kind, state_.infected_count(), std::nullopt};
}

SurvivalOutcome simulate(const Topology& topology, const ProcessParams& params, const GeneralState& init,
                         std::uint64_t seed, const Limits& limits, const JumpObserver& observer)
{
    validate(limits);
    GeneralProcess process(topology, params, init);
    Rng rng(seed);
    const RunEnd end = run_process(process, rng, limits, observer);
    return make_outcome(process, end, seed);
}

}  // namespace nlsis
