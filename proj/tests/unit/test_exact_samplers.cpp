#include <doctest.h>

#include "oracles.hpp"
#include "nlsis/estimator.hpp"
#include "nlsis/exact_samplers.hpp"
#include "nlsis/exact_solver.hpp"

#include <cmath>

using namespace nlsis;

namespace {

std::vector<double> times(const std::vector<SurvivalOutcome>& outcomes)
{
    std::vector<double> t;
    for (const auto& o : outcomes)
        t.push_back(o.time);
    return t;
}

}  // namespace

TEST_CASE("levelwise clique sampler matches the stepped chain in distribution")
{
    struct Case {
        std::size_t n;
        double lambda, alpha;
        std::size_t i0;
    };
    for (const Case c : {Case{8, 0.25, 1.0, 1}, Case{10, 0.15, -0.5, 3}, Case{6, 0.4, 0.0, 6}}) {
        const ProcessParams p(c.lambda, c.alpha);
        const auto stepped =
            run_replicas(CliqueChain{c.n}, p, CliqueState{c.i0}, {5000, 1e7, 1000000000, 1, 0.95}, Engine::gillespie);
        const auto fast =
            run_replicas(CliqueChain{c.n}, p, CliqueState{c.i0}, {5000, 1e7, 1000000000, 2, 0.95}, Engine::exact_fast);
        CHECK(oracle::ks_two_sample_p(times(stepped), times(fast)) > 0.01);
    }
}

TEST_CASE("levelwise clique sampler: jumps and peak agree with the stepped chain per run")
{
    // With identical seeds the streams differ, so compare means of jump counts.
    const ProcessParams p(0.2, 0.5);
    const auto fast = run_replicas(CliqueChain{9}, p, CliqueState{2}, {20000, 1e9, 1000000000, 3, 0.95},
                                   Engine::exact_fast);
    const auto stepped = run_replicas(CliqueChain{9}, p, CliqueState{2}, {20000, 1e9, 1000000000, 4, 0.95});
    auto mean_jumps = [](const std::vector<SurvivalOutcome>& v) {
        double s = 0.0;
        for (const auto& o : v)
            s += static_cast<double>(o.jumps);
        return s / static_cast<double>(v.size());
    };
    CHECK(mean_jumps(fast) == doctest::Approx(mean_jumps(stepped)).epsilon(0.05));
    for (const auto& o : fast) {
        CHECK(o.jumps % 2 == 0);  // two downs from the start, every up is undone
        CHECK(o.peak_infected >= 2);
    }
}

TEST_CASE("levelwise clique sampler censors exactly at t_max")
{
    const ProcessParams hot(0.5, 1.0);
    const SurvivalOutcome o = sample_clique_survival_levelwise(30, hot, 1, 5, 100.0);
    CHECK(o.censored == Censoring::time_limit);
    CHECK(o.time == 100.0);
    const SurvivalOutcome empty = sample_clique_survival_levelwise(30, hot, 0, 5, 100.0);
    CHECK(empty.time == 0.0);
    CHECK_FALSE(empty.is_censored());

    // Censored fractions agree with the stepped chain at a censoring time
    // near the median survival time.
    const ProcessParams p(0.25, 1.0);
    const double t_max = 150.0;
    const auto a = estimate_survival(CliqueChain{8}, p, CliqueState{1}, {20000, t_max, 1000000000, 6, 0.95},
                                     Engine::exact_fast);
    const auto b = estimate_survival(CliqueChain{8}, p, CliqueState{1}, {20000, t_max, 1000000000, 7, 0.95});
    CHECK(std::abs(a.censored_fraction - b.censored_fraction) < 0.02);
}

TEST_CASE("phased star sampler matches the stepped chain in distribution")
{
    struct Case {
        std::size_t n;
        double lambda, alpha;
        StarState init;
    };
    for (const Case c : {Case{8, 0.2, 0.5, {0, true}}, Case{20, 0.3, 1.0, {5, false}}, Case{5, 1.0, -0.5, {5, true}}}) {
        const ProcessParams p(c.lambda, c.alpha);
        const auto stepped =
            run_replicas(StarChain{c.n}, p, c.init, {5000, 1e7, 1000000000, 11, 0.95}, Engine::gillespie);
        const auto fast = run_replicas(StarChain{c.n}, p, c.init, {5000, 1e7, 1000000000, 12, 0.95},
                                       Engine::exact_fast);
        CHECK(oracle::ks_two_sample_p(times(stepped), times(fast)) > 0.01);
    }
}

TEST_CASE("phased star sampler mean matches the exact solve")
{
    const ProcessParams p(0.3, 1.0);
    const double exact = expected_survival_exact_small(StarChain{8}, p, StarState{0, true});
    const SurvivalStats s = estimate_survival(StarChain{8}, p, StarState{0, true}, {100000, 1e7, 1000000000, 13, 0.95},
                                              Engine::exact_fast);
    CHECK(std::abs(s.mean_censored - exact) <= 3.0 * s.ci_halfwidth / 1.959963984540054);
}

TEST_CASE("fast samplers are deterministic")
{
    const ProcessParams p(0.3, 1.0);
    CHECK(sample_star_survival_phased(30, p, {0, true}, 9, 1e3) == sample_star_survival_phased(30, p, {0, true}, 9, 1e3));
    CHECK(sample_clique_survival_levelwise(30, p, 2, 9, 1e3) == sample_clique_survival_levelwise(30, p, 2, 9, 1e3));
}
