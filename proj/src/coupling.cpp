#include "nlsis/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlsis {

CoupledRun coupled_simulate_clique(std::size_t n, const ProcessParams& lo, const ProcessParams& hi,
                                   std::size_t initial_lo, std::size_t initial_hi, std::uint64_t seed,
                                   const Limits& limits)
{
    validate(limits);
    validate_vertex_count(n, "clique size n");
    if (lo.alpha() != hi.alpha())
        throw std::invalid_argument("coupled chains must share alpha");
    if (lo.lambda() > hi.lambda())
        throw std::invalid_argument("coupling requires lambda_lo <= lambda_hi");
    if (initial_lo > initial_hi)
        throw std::invalid_argument("coupling requires I0_lo <= I0_hi");
    validate_state(CliqueChain{n}, CliqueState{initial_hi});

    const double nd = static_cast<double>(n);
    const double big_lambda = nd + hi.lambda() * std::exp((1.0 + hi.alpha()) * std::log(nd)) * nd;
    auto up = [n](const ProcessParams& p, std::size_t i) {
        return infection_rate(p, i) * static_cast<double>(n - i);
    };

    CoupledRun run;
    std::size_t a = initial_lo;
    std::size_t b = initial_hi;
    run.trajectory.push_back({0.0, a, b});
    run.lo = {.time = 0.0, .censored = Censoring::none, .jumps = 0, .peak_infected = a, .seed = seed};
    run.hi = {.time = 0.0, .censored = Censoring::none, .jumps = 0, .peak_infected = b, .seed = seed};

    Rng rng(seed);
    double time = 0.0;
    std::uint64_t events = 0;
    Censoring cut = Censoring::none;
    while (a > 0 || b > 0) {
        if (events >= limits.max_jumps) {
            cut = Censoring::jump_limit;
            break;
        }
        const double dt = exponential(rng, big_lambda);
        if (time + dt > limits.t_max) {
            time = limits.t_max;
            cut = Censoring::time_limit;
            break;
        }
        time += dt;
        ++events;
        const double u = uniform01(rng) * big_lambda;
        auto step = [&](std::size_t& i, const ProcessParams& p, SurvivalOutcome& o) {
            if (i == 0)
                return false;
            if (u < up(p, i)) {
                ++i;
                o.peak_infected = std::max(o.peak_infected, i);
            } else if (u >= big_lambda - static_cast<double>(i)) {
                --i;
                if (i == 0)
                    o.time = time;
            } else {
                return false;
            }
            ++o.jumps;
            return true;
        };
        const bool moved_lo = step(a, lo, run.lo);
        const bool moved_hi = step(b, hi, run.hi);
        if (moved_lo || moved_hi)
            run.trajectory.push_back({time, a, b});
    }
    if (a > 0) {
        run.lo.time = time;
        run.lo.censored = cut;
    }
    if (b > 0) {
        run.hi.time = time;
        run.hi.censored = cut;
    }
    return run;
}

std::size_t count_domination_violations(const CoupledRun& run)
{
    std::size_t violations = static_cast<std::size_t>(
        std::count_if(run.trajectory.begin(), run.trajectory.end(), [](const CoupledPoint& p) { return p.lo > p.hi; }));
    const bool lo_outlived = run.hi.censored == Censoring::none &&
                             (run.lo.is_censored() || run.lo.time > run.hi.time);
    return violations + (lo_outlived ? 1 : 0);
}

}  // namespace nlsis
