#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "nlsis/dynamics.hpp"
#include "nlsis/estimator.hpp"
#include "nlsis/process.hpp"
#include "nlsis/trace.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

using namespace nlsis;

namespace {

GeneralState infected_set(const Topology& t, std::vector<std::size_t> vertices)
{
    return GeneralState::from_infected(t, vertices);
}

double mean_time(const std::vector<SurvivalOutcome>& outcomes)
{
    double sum = 0.0;
    for (const auto& o : outcomes)
        sum += o.time;
    return sum / static_cast<double>(outcomes.size());
}

std::vector<double> times(const std::vector<SurvivalOutcome>& outcomes)
{
    std::vector<double> t;
    for (const auto& o : outcomes)
        t.push_back(o.time);
    return t;
}

}  // namespace

TEST_CASE("process parameter validation")
{
    CHECK_THROWS_WITH_AS(ProcessParams(0.5, -1.5), doctest::Contains("alpha must be > -1"), std::invalid_argument);
    CHECK_THROWS_AS(ProcessParams(0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ProcessParams(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ProcessParams(NAN, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ProcessParams(0.1, 4.5), std::invalid_argument);
    CHECK_NOTHROW(ProcessParams(0.0, 0.0));
    CHECK_NOTHROW(ProcessParams(0.1, 4.0));
}

TEST_CASE("infection rate examples")
{
    CHECK(infection_rate(ProcessParams(0.3, 2.0), 0) == 0.0);
    CHECK(infection_rate(ProcessParams(0.3, 2.0), 1) == 0.3);
    CHECK(infection_rate(ProcessParams(0.5, 1.0), 4) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(infection_rate(ProcessParams(0.5, -0.9), 0) == 0.0);
}

TEST_CASE("total rates: star with only the center infected")
{
    const Topology s3 = Topology::star(3);
    const ProcessParams p(0.5, 1.7);
    const RateSummary r = total_rates(s3, infected_set(s3, {s3.center()}), p);
    CHECK(r.heal_total == 1.0);
    CHECK(r.infect_total == doctest::Approx(1.5));
    const auto probs = embedded_jump_probabilities(s3, infected_set(s3, {s3.center()}), p);
    double center_heal = 0.0;
    for (const auto& j : probs)
        if (j.kind == EventKind::center_heal)
            center_heal += j.probability;
    CHECK(center_heal == doctest::Approx(0.4));
}

TEST_CASE("total rates: absorbing and lumped clique")
{
    const Topology k4 = Topology::clique(4);
    const RateSummary none = total_rates(k4, GeneralState::all_susceptible(k4), ProcessParams(0.5, 1.0));
    CHECK(none.heal_total == 0.0);
    CHECK(none.infect_total == 0.0);
    CHECK(none.events.empty());

    const RateSummary r = total_rates(CliqueChain{4}, CliqueState{2}, ProcessParams(0.5, 1.0));
    CHECK(r.heal_total == 2.0);
    CHECK(r.infect_total == doctest::Approx(4.0));

    const RateSummary g = total_rates(k4, infected_set(k4, {0, 1}), ProcessParams(0.5, 1.0));
    CHECK(g.heal_total == 2.0);
    CHECK(g.infect_total == doctest::Approx(4.0));
}

TEST_CASE("embedded jump probabilities")
{
    const auto full = embedded_jump_probabilities(CliqueChain{5}, CliqueState{5}, ProcessParams(0.7, 0.3));
    REQUIRE(full.size() == 1);
    CHECK(full[0].kind == EventKind::heal);
    CHECK(full[0].probability == 1.0);

    const auto mid = embedded_jump_probabilities(CliqueChain{4}, CliqueState{2}, ProcessParams(0.5, 1.0));
    REQUIRE(mid.size() == 2);
    CHECK(mid[0].kind == EventKind::infect);
    CHECK(mid[0].probability == doctest::Approx(2.0 / 3.0));
    CHECK(mid[1].probability == doctest::Approx(1.0 / 3.0));

    const auto star = embedded_jump_probabilities(StarChain{5}, StarState{3, false}, ProcessParams(0.5, 1.0));
    double center = 0.0;
    for (const auto& j : star)
        if (j.kind == EventKind::center_infect)
            center = j.probability;
    CHECK(center == doctest::Approx(0.6));

    CHECK_THROWS_AS(embedded_jump_probabilities(CliqueChain{4}, CliqueState{0}, ProcessParams(0.5, 1.0)),
                    std::domain_error);
    CHECK_THROWS_AS(embedded_jump_probabilities(StarChain{4}, StarState{0, false}, ProcessParams(0.5, 1.0)),
                    std::domain_error);
}

TEST_CASE("property: jump probabilities are normalized in every non-absorbing state")
{
    gen::Source src(3);
    for (int trial = 0; trial < 300; ++trial) {
        const ProcessParams p(src.real(0.0, 2.0), src.real(-0.95, 4.0));
        const std::size_t n = src.index(1, 40);
        auto sum = [](const std::vector<JumpProbability>& v) {
            double s = 0.0;
            for (const auto& j : v)
                s += j.probability;
            return s;
        };
        const std::size_t i = src.index(1, n);
        CHECK(std::abs(sum(embedded_jump_probabilities(CliqueChain{n}, CliqueState{i}, p)) - 1.0) <= 1e-12);
        const StarState s{src.index(0, n), src.coin()};
        if (s.infected_leaves > 0 || s.center_infected)
            CHECK(std::abs(sum(embedded_jump_probabilities(StarChain{n}, s, p)) - 1.0) <= 1e-12);
        const Topology g = Topology::general(src.graph(n, src.real(0.1, 0.9)));
        const GeneralState gs = GeneralState::from_infected(g, src.subset(n, src.index(1, n)));
        CHECK(std::abs(sum(embedded_jump_probabilities(g, gs, p)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("property: incremental neighbour counts match a full recount")
{
    gen::Source src(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = src.index(2, 25);
        const Topology t = Topology::general(src.graph(n, src.real(0.1, 0.8)));
        GeneralProcess process(t, ProcessParams(src.real(0.2, 3.0), src.real(-0.5, 2.0)),
                               GeneralState::from_infected(t, src.subset(n, src.index(1, n))));
        Rng rng(src.bits());
        for (int step = 0; step < 500 && !process.absorbed(); ++step) {
            REQUIRE(process.advance(rng, 1e9));
            REQUIRE(process.state().consistent_with(t));
        }
    }
}

TEST_CASE("simulate from an absorbing start")
{
    const Topology k4 = Topology::clique(4);
    const SurvivalOutcome o = simulate(k4, ProcessParams(1.0, 0.0), GeneralState::all_susceptible(k4), 1, {10, 100});
    CHECK(o.time == 0.0);
    CHECK_FALSE(o.is_censored());
    CHECK(o.jumps == 0);
    CHECK(simulate_clique_lumped(4, ProcessParams(1.0, 0.0), 0, 1, {10, 100}).time == 0.0);
    CHECK(simulate_star_lumped(4, ProcessParams(1.0, 0.0), {0, false}, 1, {10, 100}).time == 0.0);
}

TEST_CASE("simulate rejects inconsistent inputs")
{
    const Topology k4 = Topology::clique(4);
    CHECK_THROWS_AS(simulate(k4, ProcessParams(1.0, 0.0), GeneralState::all_susceptible(Topology::clique(3)), 1,
                             {10, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_clique_lumped(4, ProcessParams(1.0, 0.0), 5, 1, {10, 100}), std::invalid_argument);
    CHECK_THROWS_AS(simulate_star_lumped(4, ProcessParams(1.0, 0.0), {5, true}, 1, {10, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_clique_lumped(4, ProcessParams(1.0, 0.0), 1, 1, {0.0, 100}), std::invalid_argument);
    CHECK_THROWS_AS(simulate_clique_lumped(4, ProcessParams(1.0, 0.0), 1, 1, {10, 0}), std::invalid_argument);
}

TEST_CASE("two-vertex clique: mean survival 1 + lambda/2")
{
    const McConfig mc{100000, 1e3, 1000000, 2024, 0.95};
    const Topology k2 = Topology::clique(2);
    const std::size_t first = 0;
    const auto general = run_replicas(k2, ProcessParams(1.0, 0.0), GeneralState::from_infected(k2, {&first, 1}), mc);
    CHECK(std::abs(mean_time(general) - 1.5) <= 0.02);
    const auto lumped = run_replicas(CliqueChain{2}, ProcessParams(1.0, 0.7), CliqueState{1}, mc);
    CHECK(std::abs(mean_time(lumped) - 1.5) <= 0.02);
}

TEST_CASE("pure death: three unit exponentials")
{
    const McConfig mc{100000, 1e3, 1000000, 99, 0.95};
    const Topology k8 = Topology::clique(8);
    const auto outcomes =
        run_replicas(k8, ProcessParams(0.0, 0.0), GeneralState::from_infected(k8, std::vector<std::size_t>{2, 4, 6}), mc);
    for (const auto& o : outcomes)
        REQUIRE(o.jumps == 3);
    CHECK(std::abs(mean_time(outcomes) - 11.0 / 6.0) <= 0.02);
}

TEST_CASE("determinism and absorption")
{
    gen::Source src(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = src.index(1, 12);
        const ProcessParams p(src.real(0.0, 1.5), src.real(-0.9, 2.0));
        const Limits limits{50.0, 20000};
        const std::uint64_t seed = src.bits();
        const Topology t = src.coin() ? Topology::clique(n) : Topology::star(n);
        const GeneralState init = GeneralState::from_infected(t, src.subset(t.vertex_count(), src.index(1, n)));
        const SurvivalOutcome a = simulate(t, p, init, seed, limits);
        const SurvivalOutcome b = simulate(t, p, init, seed, limits);
        CHECK(a == b);
        CHECK(a.time > 0.0);
        if (a.is_censored()) {
            CHECK(a.time <= limits.t_max);
        } else {
            // Replaying with an observer exposes the final state.
            std::size_t last = init.infected_count();
            simulate(t, p, init, seed, limits, [&](const JumpRecord& r) {
                last = r.infected_count + (r.center_infected.value_or(false) ? 1 : 0);
            });
            CHECK(last == 0);
        }
        const StarState ss{src.index(0, n), true};
        CHECK(simulate_star_lumped(n, p, ss, seed, limits) == simulate_star_lumped(n, p, ss, seed, limits));
        CHECK(simulate_clique_lumped(n, p, 1, seed, limits) == simulate_clique_lumped(n, p, 1, seed, limits));
    }
}

TEST_CASE("censoring by time and by jumps")
{
    const ProcessParams hot(5.0, 1.0);
    const SurvivalOutcome by_time = simulate_clique_lumped(20, hot, 10, 1, {5.0, 100000000});
    CHECK(by_time.censored == Censoring::time_limit);
    CHECK(by_time.time == 5.0);
    const SurvivalOutcome by_jumps = simulate_clique_lumped(20, hot, 10, 1, {1e9, 1000});
    CHECK(by_jumps.censored == Censoring::jump_limit);
    CHECK(by_jumps.jumps == 1000);
    CHECK(by_jumps.peak_infected == 20);
}

TEST_CASE("observer and trace rows")
{
    std::ostringstream out;
    TraceWriter writer(out, true);
    const SurvivalOutcome o =
        simulate_star_lumped(3, ProcessParams(0.5, 1.0), {0, true}, 17, {100, 100000}, writer.observer());
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "jump_index,time,event_kind,infected_count,center_infected");
    std::size_t rows = 0;
    std::string last;
    while (std::getline(lines, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows == o.jumps);
    CHECK(last.substr(last.size() - 4) == ",0,0");

    std::ostringstream plain;
    TraceWriter clique_writer(plain, false);
    simulate_clique_lumped(4, ProcessParams(0.1, 0.0), 1, 3, {100, 1000}, clique_writer.observer());
    CHECK(plain.str().rfind("jump_index,time,event_kind,infected_count\n", 0) == 0);
    CHECK(plain.str().find(",heal,0\n") != std::string::npos);
}

TEST_CASE("general star reports center events separately")
{
    const Topology s = Topology::star(2);
    std::vector<EventKind> kinds;
    simulate(s, ProcessParams(0.4, 0.0), GeneralState::from_infected(s, std::vector<std::size_t>{s.center()}), 4,
             {100, 1000}, [&](const JumpRecord& r) {
                 kinds.push_back(r.kind);
                 CHECK(r.center_infected.has_value());
             });
    CHECK(std::find(kinds.begin(), kinds.end(), EventKind::center_heal) != kinds.end());
}

TEST_CASE("lumped chains agree in distribution with vertex-level simulation")
{
    const McConfig mc{4000, 1e4, 10000000, 77, 0.95};
    const ProcessParams p(0.2, 0.5);
    const Topology k6 = Topology::clique(6);
    const std::size_t first = 0;
    const auto a = run_replicas(k6, p, GeneralState::from_infected(k6, {&first, 1}), mc);
    const auto b = run_replicas(CliqueChain{6}, p, CliqueState{1}, McConfig{4000, 1e4, 10000000, 78, 0.95});
    CHECK(oracle::ks_two_sample_p(times(a), times(b)) > 0.01);

    const Topology s6 = Topology::star(6);
    const std::size_t center = s6.center();
    const auto c = run_replicas(s6, p, GeneralState::from_infected(s6, {&center, 1}), mc);
    const auto d = run_replicas(StarChain{6}, p, StarState{0, true}, McConfig{4000, 1e4, 10000000, 79, 0.95});
    CHECK(oracle::ks_two_sample_p(times(c), times(d)) > 0.01);
}

TEST_CASE("alpha = 0 matches per-edge clocks on a random graph")
{
    gen::Source src(21);
    const auto adj = src.graph(10, 0.5);
    const Topology g = Topology::general(adj);
    const ProcessParams p(0.3, 0.0);
    const std::vector<std::size_t> init{0, 1};
    const auto ours = run_replicas(g, p, GeneralState::from_infected(g, init), McConfig{4000, 1e6, 100000000, 5, 0.95});
    std::vector<double> theirs;
    for (std::uint64_t i = 0; i < 4000; ++i)
        theirs.push_back(oracle::per_edge_sis_survival(adj, 0.3, init, 1000 + i));
    CHECK(oracle::ks_two_sample_p(times(ours), theirs) > 0.01);
}
