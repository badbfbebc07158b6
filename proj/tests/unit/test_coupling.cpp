#include <doctest.h>

#include "generators.hpp"
#include "nlsis/coupling.hpp"

#include <stdexcept>

using namespace nlsis;

TEST_CASE("identical parameters give identical trajectories")
{
    const ProcessParams p(0.2, 0.5);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const CoupledRun run = coupled_simulate_clique(8, p, p, 2, 2, seed, {100, 1000000});
        for (const CoupledPoint& pt : run.trajectory)
            REQUIRE(pt.lo == pt.hi);
        CHECK(run.lo.time == run.hi.time);
        CHECK(count_domination_violations(run) == 0);
    }
}

TEST_CASE("pure-death lower chain is nonincreasing and dominated")
{
    const ProcessParams lo(0.0, 1.0), hi(0.3, 1.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const CoupledRun run = coupled_simulate_clique(8, lo, hi, 4, 4, seed, {100, 1000000});
        for (std::size_t i = 1; i < run.trajectory.size(); ++i)
            REQUIRE(run.trajectory[i].lo <= run.trajectory[i - 1].lo);
        CHECK(count_domination_violations(run) == 0);
    }
}

TEST_CASE("no domination violations over many runs")
{
    const ProcessParams lo(0.1, 0.5), hi(0.2, 0.5);
    std::size_t violations = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const CoupledRun run = coupled_simulate_clique(8, lo, hi, 1, 1, seed, {1e4, 10000000});
        violations += count_domination_violations(run);
        CHECK((run.lo.is_censored() || run.hi.is_censored() || run.lo.time <= run.hi.time));
    }
    CHECK(violations == 0);
}

TEST_CASE("property: random parameter pairs never violate domination")
{
    gen::Source src(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = src.index(1, 15);
        const double alpha = src.real(-0.9, 2.0);
        const double l1 = src.real(0.0, 1.0), l2 = src.real(0.0, 1.0);
        const std::size_t a = src.index(0, n), b = src.index(0, n);
        const CoupledRun run = coupled_simulate_clique(n, ProcessParams(std::min(l1, l2), alpha),
                                                       ProcessParams(std::max(l1, l2), alpha), std::min(a, b),
                                                       std::max(a, b), src.bits(), {20, 200000});
        REQUIRE(count_domination_violations(run) == 0);
    }
}

TEST_CASE("violation counter flags crossed pairs")
{
    CoupledRun run;
    run.trajectory = {{0.0, 1, 1}, {0.5, 2, 1}};
    run.lo.time = 1.0;
    run.hi.time = 2.0;
    CHECK(count_domination_violations(run) == 1);
    run.lo.time = 3.0;
    CHECK(count_domination_violations(run) == 2);
}

TEST_CASE("coupling preconditions")
{
    const ProcessParams a(0.1, 0.5), b(0.2, 0.5), c(0.2, 1.0);
    CHECK_THROWS_AS(coupled_simulate_clique(8, b, a, 1, 1, 0, {10, 100}), std::invalid_argument);
    CHECK_THROWS_AS(coupled_simulate_clique(8, a, c, 1, 1, 0, {10, 100}), std::invalid_argument);
    CHECK_THROWS_AS(coupled_simulate_clique(8, a, b, 2, 1, 0, {10, 100}), std::invalid_argument);
    CHECK_THROWS_AS(coupled_simulate_clique(8, a, b, 1, 9, 0, {10, 100}), std::invalid_argument);
}
