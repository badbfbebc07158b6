#pragma once

// Single-run steppers behind the simulate_* entry points. The estimator uses
// them directly so that rate tables are built once and shared by replicas.

#include "nlsis/dynamics.hpp"
#include "nlsis/sum_tree.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace nlsis {

/// Rate tables of the lumped clique chain; read-only once built.
class CliqueRates {
public:
    CliqueRates(std::size_t n, const ProcessParams& params);

    std::size_t n() const noexcept { return n_; }
    double up(std::size_t infected) const { return up_[infected]; }
    double down(std::size_t infected) const { return static_cast<double>(infected); }

private:
    std::size_t n_;
    std::vector<double> up_;
};

/// Rate tables of the lumped star chain; read-only once built.
class StarRates {
public:
    StarRates(std::size_t leaves, const ProcessParams& params);

    std::size_t leaves() const noexcept { return leaves_; }
    double lambda() const noexcept { return lambda_; }
    /// Leaf infection while the center is infected: lambda (n - I).
    double leaf_infect(std::size_t infected_leaves) const
    {
        return lambda_ * static_cast<double>(leaves_ - infected_leaves);
    }
    /// Center infection while the center is healthy: lambda I^(1+alpha).
    double center_infect(std::size_t infected_leaves) const { return center_infect_[infected_leaves]; }

private:
    std::size_t leaves_;
    double lambda_;
    std::vector<double> center_infect_;
};

enum class RunEnd { absorbed, stopped, time_limit, jump_limit };

/// Drives a stepper until absorption, a limit, or `stop(process)` holds.
template <typename Process, typename Stop>
RunEnd run_process(Process& process, Rng& rng, const Limits& limits, const JumpObserver& observer, Stop&& stop)
{
    while (!process.absorbed()) {
        if (stop(process))
            return RunEnd::stopped;
        if (process.jumps() >= limits.max_jumps)
            return RunEnd::jump_limit;
        const std::optional<EventKind> event = process.advance(rng, limits.t_max);
        if (!event)
            return RunEnd::time_limit;
        if (observer)
            observer(process.record(*event));
    }
    return RunEnd::absorbed;
}

template <typename Process>
RunEnd run_process(Process& process, Rng& rng, const Limits& limits, const JumpObserver& observer)
{
    return run_process(process, rng, limits, observer, [](const Process&) { return false; });
}

template <typename Process>
SurvivalOutcome make_outcome(const Process& process, RunEnd end, std::uint64_t seed)
{
    SurvivalOutcome out;
    out.time = process.time();
    out.jumps = process.jumps();
    out.peak_infected = process.peak();
    out.seed = seed;
    out.censored = end == RunEnd::time_limit  ? Censoring::time_limit
                   : end == RunEnd::jump_limit ? Censoring::jump_limit
                                               : Censoring::none;
    return out;
}

class CliqueProcess {
public:
    CliqueProcess(const CliqueRates& rates, std::size_t initial_infected);

    bool absorbed() const noexcept { return infected_ == 0; }
    double time() const noexcept { return time_; }
    std::uint64_t jumps() const noexcept { return jumps_; }
    std::size_t peak() const noexcept { return peak_; }
    std::size_t infected() const noexcept { return infected_; }
    CliqueState state() const noexcept { return {infected_}; }

    /// Samples the next event. If it would fire after `t_max` the clock is
    /// set to `t_max`, the state is left unchanged and nullopt is returned.
    std::optional<EventKind> advance(Rng& rng, double t_max);
    JumpRecord record(EventKind kind) const { return {jumps_, time_, kind, infected_, std::nullopt}; }

private:
    const CliqueRates* rates_;
    std::size_t infected_;
    std::size_t peak_;
    double time_ = 0.0;
    std::uint64_t jumps_ = 0;
};

class StarProcess {
public:
    StarProcess(const StarRates& rates, const StarState& init);

    bool absorbed() const noexcept { return infected_ == 0 && !center_; }
    double time() const noexcept { return time_; }
    std::uint64_t jumps() const noexcept { return jumps_; }
    /// Peak number of infected vertices, center included.
    std::size_t peak() const noexcept { return peak_; }
    StarState state() const noexcept { return {infected_, center_}; }

    std::optional<EventKind> advance(Rng& rng, double t_max);
    JumpRecord record(EventKind kind) const { return {jumps_, time_, kind, infected_, center_}; }

private:
    const StarRates* rates_;
    std::size_t infected_;
    bool center_;
    std::size_t peak_;
    double time_ = 0.0;
    std::uint64_t jumps_ = 0;
};

/// Vertex-level process on an explicit topology. One sum-tree slot per
/// vertex holds its only possible event: heal (rate 1) when infected,
/// infection (rate lambda N_v^(1+alpha)) when susceptible.
class GeneralProcess {
public:
    GeneralProcess(const Topology& topology, const ProcessParams& params, GeneralState init);

    bool absorbed() const noexcept { return state_.infected_count() == 0; }
    double time() const noexcept { return time_; }
    std::uint64_t jumps() const noexcept { return jumps_; }
    std::size_t peak() const noexcept { return peak_; }
    const GeneralState& state() const noexcept { return state_; }

    std::optional<EventKind> advance(Rng& rng, double t_max);
    JumpRecord record(EventKind kind) const;

private:
    void refresh(std::size_t v);

    const Topology* topology_;
    std::vector<double> rate_by_count_;
    GeneralState state_;
    SumTree tree_;
    std::size_t peak_;
    double time_ = 0.0;
    std::uint64_t jumps_ = 0;
};

}  // namespace nlsis
