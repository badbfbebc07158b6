#include "nlsis/exact_samplers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace nlsis {

namespace {

constexpr long long kCountCeiling = 1LL << 62;

long long negative_binomial_failures(Rng& rng, long long successes, double p)
{
    if (successes == 0)
        return 0;
    if (p >= 1.0)
        return 0;
    const long long ups = std::negative_binomial_distribution<long long>(successes, p)(rng);
    if (ups < 0 || ups > kCountCeiling)
        throw std::overflow_error("level visit count exceeds the sampler range");
    return ups;
}

double gamma_time(Rng& rng, long long shape, double rate)
{
    if (shape == 1)
        return exponential(rng, rate);
    return std::gamma_distribution<double>(static_cast<double>(shape), 1.0 / rate)(rng);
}

}  // namespace

SurvivalOutcome sample_clique_survival_levelwise(std::size_t n, const ProcessParams& params,
                                                 std::size_t initial_infected, std::uint64_t seed, double t_max)
{
    validate_vertex_count(n, "clique size n");
    validate_state(CliqueChain{n}, CliqueState{initial_infected});
    if (!(t_max > 0.0))
        throw std::invalid_argument("t_max must be > 0");

    SurvivalOutcome out;
    out.seed = seed;
    out.peak_infected = initial_infected;
    if (initial_infected == 0)
        return out;

    Rng rng(seed);
    double time = 0.0;
    long long ups_below = 0;
    std::uint64_t jumps = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const long long downs = ups_below + (i <= initial_infected ? 1 : 0);
        if (downs == 0)
            break;
        const double up = infection_rate(params, i) * static_cast<double>(n - i);
        const double down = static_cast<double>(i);
        const long long ups = up > 0.0 ? negative_binomial_failures(rng, downs, down / (up + down)) : 0;
        const long long visits = ups + downs;
        time += gamma_time(rng, visits, up + down);
        jumps += static_cast<std::uint64_t>(visits);
        out.peak_infected = std::max(out.peak_infected, i);
        if (time > t_max) {
            out.time = t_max;
            out.censored = Censoring::time_limit;
            out.jumps = jumps;
            return out;
        }
        ups_below = ups;
    }
    out.time = time;
    out.jumps = jumps;
    return out;
}

SurvivalOutcome sample_star_survival_phased(std::size_t leaves, const ProcessParams& params, const StarState& init,
                                            std::uint64_t seed, double t_max)
{
    validate_vertex_count(leaves, "star leaf count n");
    validate_state(StarChain{leaves}, init);
    if (!(t_max > 0.0))
        throw std::invalid_argument("t_max must be > 0");

    SurvivalOutcome out;
    out.seed = seed;
    std::size_t infected = init.infected_leaves;
    bool center = init.center_infected;
    out.peak_infected = infected + (center ? 1 : 0);

    Rng rng(seed);
    const double lambda = params.lambda();
    const double s = 1.0 + lambda;
    double time = 0.0;
    std::uint64_t jumps = 0;
    auto censor = [&] {
        out.time = t_max;
        out.censored = Censoring::time_limit;
        out.jumps = jumps;
        return out;
    };

    while (center || infected > 0) {
        if (center) {
            const double tau = exponential(rng, 1.0);
            if (time + tau > t_max)
                return censor();
            time += tau;
            const double decay = std::exp(-s * tau);
            const double p_stay = lambda / s + decay / s;
            const double p_catch = (lambda / s) * -std::expm1(-s * tau);
            const auto kept = std::binomial_distribution<long long>(static_cast<long long>(infected),
                                                                    std::min(1.0, p_stay))(rng);
            const auto caught = std::binomial_distribution<long long>(static_cast<long long>(leaves - infected),
                                                                      std::min(1.0, p_catch))(rng);
            const std::size_t next = static_cast<std::size_t>(kept + caught);
            out.peak_infected = std::max(out.peak_infected, std::max(infected, next) + 1);
            jumps += (next > infected ? next - infected : infected - next) + 1;
            infected = next;
            center = false;
        } else {
            const double heal = static_cast<double>(infected);
            const double catch_center = infection_rate(params, infected);
            const double total = heal + catch_center;
            const double dt = exponential(rng, total);
            if (time + dt > t_max)
                return censor();
            time += dt;
            ++jumps;
            if (uniform01(rng) * total < heal) {
                --infected;
            } else {
                center = true;
                out.peak_infected = std::max(out.peak_infected, infected + 1);
            }
        }
    }
    out.time = time;
    out.jumps = jumps;
    return out;
}

}  // namespace nlsis
