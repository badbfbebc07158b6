#include "nlsis/estimator.hpp"

#include "nlsis/exact_samplers.hpp"
#include "nlsis/process.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace nlsis {

namespace {

double normal_quantile_two_sided(double confidence)
{
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("confidence must lie in (0, 1)");
    return boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2.0);
}

// Nearest-rank quantile index: ceil(q N) - 1.
std::size_t rank_index(double q, std::size_t count)
{
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(count)));
    return std::clamp<std::size_t>(rank, 1, count) - 1;
}

Limits limits_of(const McConfig& mc)
{
    return {mc.t_max, mc.max_jumps};
}

ProbabilityEstimate from_flags(const std::vector<std::uint8_t>& flags, double confidence)
{
    ProbabilityEstimate out;
    out.runs = flags.size();
    out.hits = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), std::uint8_t{1}));
    out.estimate = static_cast<double>(out.hits) / static_cast<double>(out.runs);
    out.ci = wilson_interval(out.hits, out.runs, confidence);
    return out;
}

template <typename Process, typename State, typename Target>
ProbabilityEstimate hitting(std::size_t runs, const McConfig& mc, Execution execution,
                            const std::function<Process()>& make, const Target& target)
{
    std::vector<std::uint8_t> hit(runs, 0);
    for_each_replica(
        runs, mc.master_seed,
        [&](std::size_t i, std::uint64_t seed) {
            Process process = make();
            Rng rng(seed);
            const RunEnd end = run_process(process, rng, limits_of(mc), {},
                                           [&](const Process& p) { return target(State(p.state())); });
            hit[i] = end == RunEnd::stopped ? 1 : 0;
        },
        execution);
    return from_flags(hit, mc.confidence);
}

}  // namespace

void validate(const McConfig& mc)
{
    if (mc.runs < 1)
        throw std::invalid_argument("runs must be >= 1");
    validate(limits_of(mc));
    normal_quantile_two_sided(mc.confidence);
}

std::vector<SurvivalOutcome> run_replicas(const Topology& topology, const ProcessParams& params,
                                          const GeneralState& init, const McConfig& mc, Execution execution)
{
    validate(mc);
    validate_state(topology, init);
    std::vector<SurvivalOutcome> out(mc.runs);
    for_each_replica(
        mc.runs, mc.master_seed,
        [&](std::size_t i, std::uint64_t seed) {
            GeneralProcess process(topology, params, init);
            Rng rng(seed);
            out[i] = make_outcome(process, run_process(process, rng, limits_of(mc), {}), seed);
        },
        execution);
    return out;
}

std::vector<SurvivalOutcome> run_replicas(const CliqueChain& chain, const ProcessParams& params,
                                          const CliqueState& init, const McConfig& mc, Engine engine,
                                          Execution execution)
{
    validate(mc);
    const CliqueRates rates(chain.n, params);
    validate_state(chain, init);
    std::vector<SurvivalOutcome> out(mc.runs);
    for_each_replica(
        mc.runs, mc.master_seed,
        [&](std::size_t i, std::uint64_t seed) {
            if (engine == Engine::exact_fast) {
                out[i] = sample_clique_survival_levelwise(chain.n, params, init.infected, seed, mc.t_max);
                return;
            }
            CliqueProcess process(rates, init.infected);
            Rng rng(seed);
            out[i] = make_outcome(process, run_process(process, rng, limits_of(mc), {}), seed);
        },
        execution);
    return out;
}

std::vector<SurvivalOutcome> run_replicas(const StarChain& chain, const ProcessParams& params, const StarState& init,
                                          const McConfig& mc, Engine engine, Execution execution)
{
    validate(mc);
    const StarRates rates(chain.leaves, params);
    validate_state(chain, init);
    std::vector<SurvivalOutcome> out(mc.runs);
    for_each_replica(
        mc.runs, mc.master_seed,
        [&](std::size_t i, std::uint64_t seed) {
            if (engine == Engine::exact_fast) {
                out[i] = sample_star_survival_phased(chain.leaves, params, init, seed, mc.t_max);
                return;
            }
            StarProcess process(rates, init);
            Rng rng(seed);
            out[i] = make_outcome(process, run_process(process, rng, limits_of(mc), {}), seed);
        },
        execution);
    return out;
}

SurvivalStats aggregate(std::span<const SurvivalOutcome> outcomes, double t_max, std::uint64_t master_seed,
                        double confidence)
{
    if (outcomes.empty())
        throw std::invalid_argument("cannot aggregate zero runs");
    const double z = normal_quantile_two_sided(confidence);

    struct Sample {
        double time;
        bool censored;
    };
    std::vector<Sample> samples;
    samples.reserve(outcomes.size());
    for (const SurvivalOutcome& o : outcomes)
        samples.push_back({std::min(o.time, t_max), o.is_censored()});
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return std::tie(a.time, a.censored) < std::tie(b.time, b.censored); });

    const std::size_t count = samples.size();
    const double nd = static_cast<double>(count);
    double sum = 0.0;
    std::size_t censored = 0;
    for (const Sample& s : samples) {
        sum += s.time;
        censored += s.censored ? 1 : 0;
    }
    const double mean = sum / nd;
    double squares = 0.0;
    for (const Sample& s : samples)
        squares += (s.time - mean) * (s.time - mean);
    const double sd = count > 1 ? std::sqrt(squares / (nd - 1.0)) : 0.0;

    SurvivalStats stats;
    stats.mean_censored = mean;
    stats.q10 = samples[rank_index(0.1, count)].time;
    const Sample& mid = samples[rank_index(0.5, count)];
    stats.q50 = mid.time;
    stats.median = mid.time;
    stats.median_beyond_censor = mid.censored;
    stats.q90 = samples[rank_index(0.9, count)].time;
    stats.censored_fraction = static_cast<double>(censored) / nd;
    stats.ci_halfwidth = z * sd / std::sqrt(nd);
    stats.runs = count;
    stats.master_seed = master_seed;
    stats.t_max = t_max;
    return stats;
}

std::vector<SurvivalOutcome> recensor(std::span<const SurvivalOutcome> outcomes, double t_max)
{
    if (!(t_max > 0.0))
        throw std::invalid_argument("t_max must be > 0");
    std::vector<SurvivalOutcome> out(outcomes.begin(), outcomes.end());
    for (SurvivalOutcome& o : out) {
        if (o.time > t_max) {
            o.time = t_max;
            if (!o.is_censored())
                o.censored = Censoring::time_limit;
        }
    }
    return out;
}

SurvivalStats estimate_survival(const Topology& topology, const ProcessParams& params, const GeneralState& init,
                                const McConfig& mc, Execution execution)
{
    const auto outcomes = run_replicas(topology, params, init, mc, execution);
    return aggregate(outcomes, mc.t_max, mc.master_seed, mc.confidence);
}

SurvivalStats estimate_survival(const CliqueChain& chain, const ProcessParams& params, const CliqueState& init,
                                const McConfig& mc, Engine engine, Execution execution)
{
    const auto outcomes = run_replicas(chain, params, init, mc, engine, execution);
    return aggregate(outcomes, mc.t_max, mc.master_seed, mc.confidence);
}

SurvivalStats estimate_survival(const StarChain& chain, const ProcessParams& params, const StarState& init,
                                const McConfig& mc, Engine engine, Execution execution)
{
    const auto outcomes = run_replicas(chain, params, init, mc, engine, execution);
    return aggregate(outcomes, mc.t_max, mc.master_seed, mc.confidence);
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence)
{
    if (trials == 0)
        throw std::invalid_argument("Wilson interval needs at least one trial");
    if (successes > trials)
        throw std::invalid_argument("successes exceed trials");
    const double z = normal_quantile_two_sided(confidence);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    const double half = z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {successes == 0 ? 0.0 : std::max(0.0, centre - half), successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

ProbabilityEstimate estimate_hitting_probability(const CliqueChain& chain, const ProcessParams& params,
                                                 const CliqueState& init,
                                                 const std::function<bool(const CliqueState&)>& target,
                                                 const McConfig& mc, Execution execution)
{
    validate(mc);
    const CliqueRates rates(chain.n, params);
    validate_state(chain, init);
    return hitting<CliqueProcess, CliqueState>(
        mc.runs, mc, execution, [&] { return CliqueProcess(rates, init.infected); }, target);
}

ProbabilityEstimate estimate_hitting_probability(const StarChain& chain, const ProcessParams& params,
                                                 const StarState& init,
                                                 const std::function<bool(const StarState&)>& target,
                                                 const McConfig& mc, Execution execution)
{
    validate(mc);
    const StarRates rates(chain.leaves, params);
    validate_state(chain, init);
    return hitting<StarProcess, StarState>(
        mc.runs, mc, execution, [&] { return StarProcess(rates, init); }, target);
}

std::size_t rise_target(std::size_t leaves, double lambda, double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::invalid_argument("rise parameter z must be a finite value > 0");
    const double raw = lambda * static_cast<double>(leaves) / (4.0 * z);
    return static_cast<std::size_t>(std::ceil(raw));
}

ProbabilityEstimate estimate_phase_event(const StarChain& chain, const ProcessParams& params,
                                         const CenterHealthyDrop& phase, const McConfig& mc, Execution execution)
{
    validate(mc);
    validate_vertex_count(chain.leaves, "star leaf count n");
    if (phase.from > chain.leaves)
        throw std::invalid_argument("drop phase requires x <= n");
    if (phase.to > phase.from)
        throw std::invalid_argument("drop phase requires y <= x");
    const StarRates rates(chain.leaves, params);
    std::vector<std::uint8_t> success(mc.runs, 0);
    for_each_replica(
        mc.runs, mc.master_seed,
        [&](std::size_t r, std::uint64_t seed) {
            Rng rng(seed);
            std::size_t infected = phase.from;
            while (infected > phase.to) {
                const double heal = static_cast<double>(infected);
                const double reinfect = rates.center_infect(infected);
                if (uniform01(rng) * (heal + reinfect) >= heal)
                    return;
                --infected;
            }
            success[r] = 1;
        },
        execution);
    return from_flags(success, mc.confidence);
}

ProbabilityEstimate estimate_phase_event(const StarChain& chain, const ProcessParams& params,
                                         const CenterInfectedRise& phase, const McConfig& mc, Execution execution)
{
    validate(mc);
    validate_vertex_count(chain.leaves, "star leaf count n");
    const std::size_t delta = rise_target(chain.leaves, params.lambda(), phase.z);
    if (phase.start > chain.leaves || phase.start + delta > chain.leaves)
        throw std::invalid_argument("rise phase requires start + ceil(lambda n / (4 z)) <= n");
    const std::size_t goal = phase.start + delta;
    const StarRates rates(chain.leaves, params);
    std::vector<std::uint8_t> success(mc.runs, 0);
    for_each_replica(
        mc.runs, mc.master_seed,
        [&](std::size_t r, std::uint64_t seed) {
            Rng rng(seed);
            std::size_t infected = phase.start;
            for (std::uint64_t step = 0; infected < goal; ++step) {
                if (step >= mc.max_jumps)
                    return;
                const double up = rates.leaf_infect(infected);
                const double down = static_cast<double>(infected);
                const double u = uniform01(rng) * (up + down + 1.0);
                if (u < up)
                    ++infected;
                else if (u < up + down)
                    --infected;
                else
                    return;
            }
            success[r] = 1;
        },
        execution);
    return from_flags(success, mc.confidence);
}

}  // namespace nlsis
