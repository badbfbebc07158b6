#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "nlsis/estimator.hpp"
#include "nlsis/exact_solver.hpp"

#include <cmath>
#include <stdexcept>

using namespace nlsis;

namespace {

double clique_by_iteration(std::size_t n, const ProcessParams& p, std::size_t i0)
{
    return oracle::mean_absorption_by_iteration(n + 1, i0, [&](std::size_t i) {
        std::vector<std::pair<std::size_t, double>> out{{i - 1, static_cast<double>(i)}};
        if (i < n)
            out.push_back({i + 1, p.lambda() * std::pow(static_cast<double>(i), 1.0 + p.alpha()) *
                                      static_cast<double>(n - i)});
        return out;
    });
}

double star_by_iteration(std::size_t n, const ProcessParams& p, StarState init)
{
    // State index 2I + c; index 0 is (0, healthy) and absorbing.
    return oracle::mean_absorption_by_iteration(
        2 * (n + 1), 2 * init.infected_leaves + (init.center_infected ? 1 : 0), [&](std::size_t s) {
            const std::size_t i = s / 2;
            const bool c = s % 2;
            std::vector<std::pair<std::size_t, double>> out;
            if (i > 0)
                out.push_back({2 * (i - 1) + c, static_cast<double>(i)});
            if (c) {
                out.push_back({2 * i, 1.0});
                if (i < n)
                    out.push_back({2 * (i + 1) + 1, p.lambda() * static_cast<double>(n - i)});
            } else {
                out.push_back({2 * i + 1, p.lambda() * std::pow(static_cast<double>(i), 1.0 + p.alpha())});
            }
            return out;
        });
}

}  // namespace

TEST_CASE("absorbing start")
{
    CHECK(expected_survival_exact_small(CliqueChain{5}, ProcessParams(1.0, 0.0), CliqueState{0}) == 0.0);
    CHECK(expected_survival_exact_small(StarChain{5}, ProcessParams(1.0, 0.0), StarState{0, false}) == 0.0);
}

TEST_CASE("two-vertex clique closed form")
{
    for (double alpha : {-0.5, 0.0, 0.7, 3.0})
        for (SolveMethod m : {SolveMethod::dense, SolveMethod::structured})
            CHECK(expected_survival_exact_small(CliqueChain{2}, ProcessParams(1.0, alpha), CliqueState{1}, m) ==
                  doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("three-vertex clique by hand")
{
    // From 1: up at 2, down at 1. From 2: up at 2, down at 2. From 3: down at 3.
    // tau1 = 1/3 + 2/3 tau2, tau2 = 1/4 + tau3/2 + tau1/2, tau3 = 1/3 + tau2
    // => tau2 = 5/6 + tau1 => tau1 = 8/3.
    const ProcessParams p(1.0, 0.0);
    CHECK(expected_survival_exact_small(CliqueChain{3}, p, CliqueState{1}) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
    CHECK(clique_by_iteration(3, p, 1) == doctest::Approx(8.0 / 3.0).epsilon(1e-11));
    const SurvivalStats s = estimate_survival(CliqueChain{3}, p, CliqueState{1}, {100000, 1e4, 100000000, 3, 0.95});
    CHECK(std::abs(s.mean_censored - 8.0 / 3.0) <= 3.0 * s.ci_halfwidth / 1.959963984540054);
}

TEST_CASE("one-leaf star by hand")
{
    // tau(0,1) = 1/(1+l) + l/(1+l) tau(1,1); tau(1,1) = 1/2 + tau(0,1)/2 + tau(1,0)/2;
    // tau(1,0) = 1/(1+l) + l/(1+l) tau(1,1). With l = 1: tau(0,1) = tau(1,0) = 1/2 + tau(1,1)/2,
    // tau(1,1) = 1/2 + 1/2 + tau(1,1)/2  =>  tau(1,1) = 2, tau(0,1) = 3/2.
    for (SolveMethod m : {SolveMethod::dense, SolveMethod::structured}) {
        CHECK(expected_survival_exact_small(StarChain{1}, ProcessParams(1.0, 2.0), StarState{0, true}, m) ==
              doctest::Approx(1.5).epsilon(1e-14));
        CHECK(expected_survival_exact_small(StarChain{1}, ProcessParams(1.0, 2.0), StarState{1, true}, m) ==
              doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("property: dense and structured solves agree with value iteration")
{
    gen::Source src(29);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = src.index(1, 12);
        const ProcessParams p(src.real(0.0, 0.6), src.real(-0.9, 1.5));
        const std::size_t i0 = src.index(1, n);
        const double dense = expected_survival_exact_small(CliqueChain{n}, p, CliqueState{i0}, SolveMethod::dense);
        const double fast = expected_survival_exact_small(CliqueChain{n}, p, CliqueState{i0}, SolveMethod::structured);
        // The dense LU drifts once expected times reach ~1e6.
        CHECK(dense == doctest::Approx(fast).epsilon(fast < 1e5 ? 1e-9 : 1e-4));
        CHECK(fast == doctest::Approx(expected_survival_exact_small(CliqueChain{n}, p, CliqueState{i0})));
        if (dense < 1e4)
            CHECK(dense == doctest::Approx(clique_by_iteration(n, p, i0)).epsilon(1e-8));

        const StarState s{src.index(0, n), true};
        const double sd = expected_survival_exact_small(StarChain{n}, p, s, SolveMethod::dense);
        const double ss = expected_survival_exact_small(StarChain{n}, p, s, SolveMethod::structured);
        CHECK(sd == doctest::Approx(ss).epsilon(1e-9));
        if (sd < 1e4)
            CHECK(sd == doctest::Approx(star_by_iteration(n, p, s)).epsilon(1e-8));
    }
}

TEST_CASE("ill-conditioned clique matches rational arithmetic")
{
    // Same rate table evaluated with exact fractions in the birth-death recursion.
    const ProcessParams p(0.40552561376999208, 1.0337977141299386);
    CHECK(expected_survival_exact_small(CliqueChain{12}, p, CliqueState{2}) ==
          doctest::Approx(18001678754.41964).epsilon(1e-13));
}

TEST_CASE("large chains use the structured path")
{
    const ProcessParams p(0.1 * std::pow(4096.0, -2.0 / 3.0), 1.0);
    const double big = expected_survival_exact_small(StarChain{4096}, p, StarState{0, true});
    CHECK(big > 1.0);
    CHECK(big < 3.0);
    const ProcessParams q(0.5 / 1000.0, 0.0);
    CHECK(expected_survival_exact_small(CliqueChain{1000}, q, CliqueState{1}, SolveMethod::dense) ==
          doctest::Approx(expected_survival_exact_small(CliqueChain{1000}, q, CliqueState{1}, SolveMethod::structured))
              .epsilon(1e-10));
}

TEST_CASE("state space limit")
{
    CHECK_THROWS_AS(expected_survival_exact_small(CliqueChain{10000}, ProcessParams(1e-4, 0.0), CliqueState{1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_survival_exact_small(StarChain{5000}, ProcessParams(1e-4, 0.0), StarState{0, true}),
                    std::invalid_argument);
    CHECK_NOTHROW(expected_survival_exact_small(StarChain{4999}, ProcessParams(1e-4, 0.0), StarState{0, true}));
    CHECK_THROWS_AS(expected_survival_exact_small(CliqueChain{4}, ProcessParams(1e-4, 0.0), CliqueState{5}),
                    std::invalid_argument);
}

TEST_CASE("twelve-vertex clique matches Monte Carlo")
{
    const ProcessParams p(1.0 / 12.0, 0.0);
    const double exact = expected_survival_exact_small(CliqueChain{12}, p, CliqueState{1});
    const SurvivalStats s = estimate_survival(CliqueChain{12}, p, CliqueState{1}, {100000, 1e6, 100000000, 12, 0.95});
    CHECK(s.censored_fraction == 0.0);
    CHECK(std::abs(s.mean_censored - exact) <= 3.0 * s.ci_halfwidth / 1.959963984540054);
}

TEST_CASE("one-leaf star matches Monte Carlo")
{
    const ProcessParams p(1.0, 0.3);
    const double exact = expected_survival_exact_small(StarChain{1}, p, StarState{0, true});
    const SurvivalStats s = estimate_survival(StarChain{1}, p, StarState{0, true}, {100000, 1e6, 100000000, 1, 0.95});
    CHECK(std::abs(s.mean_censored - exact) <= 3.0 * s.ci_halfwidth / 1.959963984540054);
}
