#include "cli.hpp"

#include "experiment_config.hpp"
#include "nlsis/analysis.hpp"
#include "nlsis/coupling.hpp"
#include "nlsis/dynamics.hpp"
#include "nlsis/exact_solver.hpp"
#include "nlsis/format.hpp"
#include "nlsis/sweep.hpp"
#include "nlsis/trace.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace nlsis::cli {

namespace {

constexpr double kDefaultTMax = 1e4;
constexpr std::uint64_t kDefaultMaxJumps = 10'000'000;

/// Seed precedence: explicit flag, then NLSIS_SEED, then 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag)
        return *flag;
    const char* env = std::getenv("NLSIS_SEED");
    if (env == nullptr || *env == '\0')
        return 0;
    const std::string text(env);
    std::uint64_t value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size())
        throw std::invalid_argument("NLSIS_SEED must be a non-negative integer, got '" + text + "'");
    return value;
}

struct SimulateArgs {
    std::string topology;
    std::optional<std::size_t> n;
    double lambda = 0.0;
    double alpha = 0.0;
    std::string init = "one";
    std::optional<std::uint64_t> seed;
    double t_max = kDefaultTMax;
    std::uint64_t max_jumps = kDefaultMaxJumps;
    std::optional<std::string> trace;
    bool general = false;
};

std::vector<std::size_t> first_vertices(std::size_t count)
{
    std::vector<std::size_t> v(count);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

GeneralState general_init(const Topology& topology, const InitRule& rule)
{
    if (rule.kind == InitRule::Kind::center) {
        if (topology.kind() != TopologyKind::star)
            throw std::invalid_argument("init 'center' requires a star topology");
        const std::size_t center = topology.center();
        return GeneralState::from_infected(topology, std::span<const std::size_t>(&center, 1));
    }
    const std::size_t count = rule.kind == InitRule::Kind::one ? 1 : rule.count;
    const std::size_t limit = topology.vertex_count() - (topology.kind() == TopologyKind::star ? 1 : 0);
    if (count > limit)
        throw std::invalid_argument("init count exceeds the number of available vertices");
    const auto infected = first_vertices(count);
    return GeneralState::from_infected(topology, infected);
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out)
{
    const ProcessParams params(a.lambda, a.alpha);
    const InitRule init = parse_init_rule(a.init);
    const Limits limits{a.t_max, a.max_jumps};
    validate(limits);
    const std::uint64_t seed = resolve_seed(a.seed);

    std::ofstream trace_file;
    std::optional<TraceWriter> writer;
    auto open_trace = [&](bool with_center) {
        if (!a.trace)
            return;
        trace_file.open(*a.trace);
        if (!trace_file)
            throw std::runtime_error("cannot open trace file '" + *a.trace + "'");
        writer.emplace(trace_file, with_center);
    };
    auto observer = [&]() -> JumpObserver { return writer ? writer->observer() : JumpObserver{}; };

    SurvivalOutcome outcome;
    const bool edgelist = a.topology.rfind("edgelist:", 0) == 0;
    if (edgelist || a.general) {
        Topology topology = edgelist ? Topology::load_edge_list(a.topology.substr(9)) : Topology::clique(1);
        if (!edgelist) {
            if (!a.n)
                throw std::invalid_argument("--n is required for clique and star topologies");
            if (a.topology == "clique")
                topology = Topology::clique(*a.n);
            else if (a.topology == "star")
                topology = Topology::star(*a.n);
            else
                throw std::invalid_argument("--topology must be clique, star or edgelist:<path>");
        }
        const GeneralState state = general_init(topology, init);
        open_trace(topology.kind() == TopologyKind::star);
        outcome = simulate(topology, params, state, seed, limits, observer());
    } else {
        if (!a.n)
            throw std::invalid_argument("--n is required for clique and star topologies");
        if (a.topology == "clique") {
            const CliqueState state = resolve_clique_init(init, *a.n);
            open_trace(false);
            outcome = simulate_clique_lumped(*a.n, params, state.infected, seed, limits, observer());
        } else if (a.topology == "star") {
            const StarState state = resolve_star_init(init, *a.n);
            open_trace(true);
            outcome = simulate_star_lumped(*a.n, params, state, seed, limits, observer());
        } else {
            throw std::invalid_argument("--topology must be clique, star or edgelist:<path>");
        }
    }
    out << "time=" << format_double(outcome.time) << " censored=" << to_string(outcome.censored)
        << " jumps=" << outcome.jumps << " peak_infected=" << outcome.peak_infected << " seed=" << outcome.seed
        << '\n';
    return kSuccess;
}

struct SweepArgs {
    std::string config;
    std::optional<std::string> output;
    std::optional<std::uint64_t> seed;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out)
{
    ExperimentSpec spec = load_experiment_config(a.config);
    if (a.seed || !spec.has_master_seed)
        spec.sweep.master_seed = resolve_seed(a.seed);
    if (a.output)
        spec.output = a.output;
    const std::vector<SweepRow> rows = sweep(spec.sweep);
    if (spec.output) {
        std::ofstream file(*spec.output);
        if (!file)
            throw std::runtime_error("cannot open output file '" + *spec.output + "'");
        write_config_echo(file, spec, rows);
        write_sweep_csv(file, rows);
        out << "rows=" << rows.size() << " output=" << *spec.output << '\n';
    } else {
        write_config_echo(out, spec, rows);
        write_sweep_csv(out, rows);
    }
    return kSuccess;
}

struct OracleArgs {
    double p = 0.0;
    std::int64_t l = 0, u = 0, p0 = 0;
    std::size_t n = 0;
    double lambda = 0.0;
    double alpha = 0.0;
    std::size_t x = 0, y = 0;
    std::string topology;
    std::string init = "one";
    std::string method = "automatic";
    std::string side;
};

SolveMethod parse_method(const std::string& text)
{
    if (text == "automatic")
        return SolveMethod::automatic;
    if (text == "dense")
        return SolveMethod::dense;
    if (text == "structured")
        return SolveMethod::structured;
    throw std::invalid_argument("--method must be automatic, dense or structured");
}

int cmd_oracle(const std::string& op, const OracleArgs& a, std::ostream& out)
{
    if (op == "ruin") {
        const RuinProbabilities r = gamblers_ruin_absorption({a.p, a.l, a.u, a.p0});
        out << "lower=" << format_double(r.lower) << " upper=" << format_double(r.upper) << '\n';
    } else if (op == "equilibrium") {
        out << "equilibrium=" << format_double(equilibrium_infected(a.n, a.lambda, a.alpha)) << '\n';
    } else if (op == "beta") {
        out << "beta=" << format_double(beta(a.n, a.lambda, a.alpha)) << '\n';
    } else if (op == "drop-exact") {
        out << "drop_exact=" << format_double(drop_probability_exact(a.x, a.y, a.lambda, a.alpha)) << '\n';
    } else if (op == "drop-bound") {
        out << "drop_bound=" << format_double(drop_probability_bound(a.x, a.y, a.lambda, a.alpha)) << '\n';
    } else if (op == "reach-bounds") {
        const ProbabilityBounds b = reach_equilibrium_prob_bounds(a.n, a.lambda, a.alpha);
        out << "level=" << format_double(reach_equilibrium_level(a.n, a.lambda, a.alpha))
            << " lower=" << format_double(b.lower) << " upper=" << format_double(b.upper) << '\n';
    } else if (op == "expected-survival") {
        const ProcessParams params(a.lambda, a.alpha);
        const InitRule init = parse_init_rule(a.init);
        const SolveMethod method = parse_method(a.method);
        const GraphKind kind = parse_graph_kind(a.topology);
        const double value =
            kind == GraphKind::clique
                ? expected_survival_exact_small(CliqueChain{a.n}, params, resolve_clique_init(init, a.n), method)
                : expected_survival_exact_small(StarChain{a.n}, params, resolve_star_init(init, a.n), method);
        out << "expected_survival=" << format_double(value) << '\n';
    } else if (op == "max-exp") {
        out << "max_exp=" << format_double(max_exponential_expectation(a.n, a.lambda)) << '\n';
    } else if (op == "threshold") {
        ThresholdSide side;
        if (a.side == "fast")
            side = ThresholdSide::fast;
        else if (a.side == "slow")
            side = ThresholdSide::slow;
        else
            throw std::invalid_argument("--side must be fast or slow");
        out << "threshold=" << format_double(threshold_lambda(parse_graph_kind(a.topology), a.n, a.alpha, side))
            << '\n';
    }
    return kSuccess;
}

struct CoupleArgs {
    std::size_t n = 0;
    double lambda_lo = 0.0;
    double lambda_hi = 0.0;
    double alpha = 0.0;
    std::size_t runs = 0;
    std::optional<std::uint64_t> seed;
    std::size_t i0_lo = 1;
    std::size_t i0_hi = 1;
    double t_max = 100.0;
    std::uint64_t max_jumps = kDefaultMaxJumps;
};

int cmd_couple_test(const CoupleArgs& a, std::ostream& out)
{
    const ProcessParams lo(a.lambda_lo, a.alpha);
    const ProcessParams hi(a.lambda_hi, a.alpha);
    if (a.lambda_lo > a.lambda_hi)
        throw std::invalid_argument("--lambda-lo must not exceed --lambda-hi");
    if (a.runs < 1)
        throw std::invalid_argument("--runs must be >= 1");
    const Limits limits{a.t_max, a.max_jumps};
    validate(limits);
    const std::uint64_t seed = resolve_seed(a.seed);
    std::vector<std::size_t> violations(a.runs, 0);
    for_each_replica(
        a.runs, seed,
        [&](std::size_t i, std::uint64_t s) {
            violations[i] = count_domination_violations(coupled_simulate_clique(a.n, lo, hi, a.i0_lo, a.i0_hi, s, limits));
        },
        Execution::parallel);
    const std::size_t bad = static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [](std::size_t v) { return v > 0; }));
    out << "violations=" << bad << " runs=" << a.runs << '\n';
    return bad == 0 ? kSuccess : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Non-linear SIS contact process simulator and analysis toolkit", "nlsis"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run one simulation and print its outcome");
    simulate_cmd->add_option("--topology", sim.topology, "clique | star | edgelist:<path>")->required();
    simulate_cmd->add_option("--n", sim.n, "Clique size or star leaf count");
    simulate_cmd->add_option("--lambda", sim.lambda, "Infection coefficient")->required();
    simulate_cmd->add_option("--alpha", sim.alpha, "Infection exponent")->required();
    simulate_cmd->add_option("--init", sim.init, "one | center | count:<k>");
    simulate_cmd->add_option("--seed", sim.seed, "RNG seed (overrides NLSIS_SEED)");
    simulate_cmd->add_option("--t-max", sim.t_max, "Censoring time");
    simulate_cmd->add_option("--max-jumps", sim.max_jumps, "Censoring jump count");
    simulate_cmd->add_option("--trace", sim.trace, "Write one CSV row per jump to this file");
    simulate_cmd->add_flag("--general", sim.general, "Simulate clique/star vertex by vertex");

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a configured sweep and write CSV");
    sweep_cmd->add_option("config", sw.config, "key = value experiment file")->required();
    sweep_cmd->add_option("--output", sw.output, "CSV path (overrides the config)");
    sweep_cmd->add_option("--seed", sw.seed, "Master seed (overrides the config and NLSIS_SEED)");

    OracleArgs orc;
    std::string oracle_op;
    auto* oracle_cmd = app.add_subcommand("oracle", "Evaluate an analytic formula");
    oracle_cmd->require_subcommand(1);
    auto add_op = [&](const std::string& name, const std::string& help) {
        auto* sub = oracle_cmd->add_subcommand(name, help);
        sub->final_callback([&oracle_op, name] { oracle_op = name; });
        return sub;
    };
    auto* ruin = add_op("ruin", "Gambler's ruin absorption probabilities");
    ruin->add_option("--p", orc.p)->required();
    ruin->add_option("--l", orc.l)->required();
    ruin->add_option("--u", orc.u)->required();
    ruin->add_option("--p0", orc.p0)->required();
    for (const char* name : {"equilibrium", "beta", "reach-bounds"}) {
        auto* sub = add_op(name, "Clique/star formula in n, lambda, alpha");
        sub->add_option("--n", orc.n)->required();
        sub->add_option("--lambda", orc.lambda)->required();
        sub->add_option("--alpha", orc.alpha)->required();
    }
    for (const char* name : {"drop-exact", "drop-bound"}) {
        auto* sub = add_op(name, "Center-healthy drop probability");
        sub->add_option("--x", orc.x)->required();
        sub->add_option("--y", orc.y)->required();
        sub->add_option("--lambda", orc.lambda)->required();
        sub->add_option("--alpha", orc.alpha)->required();
    }
    auto* expected = add_op("expected-survival", "Exact expected survival time of a lumped chain");
    expected->add_option("--topology", orc.topology)->required();
    expected->add_option("--n", orc.n)->required();
    expected->add_option("--lambda", orc.lambda)->required();
    expected->add_option("--alpha", orc.alpha)->required();
    expected->add_option("--init", orc.init);
    expected->add_option("--method", orc.method);
    auto* max_exp = add_op("max-exp", "Expected maximum of n exponentials");
    max_exp->add_option("--n", orc.n)->required();
    max_exp->add_option("--lambda", orc.lambda)->required();
    auto* threshold = add_op("threshold", "Threshold boundary in lambda");
    threshold->add_option("--topology", orc.topology)->required();
    threshold->add_option("--n", orc.n)->required();
    threshold->add_option("--alpha", orc.alpha)->required();
    threshold->add_option("--side", orc.side)->required();

    CoupleArgs cp;
    auto* couple_cmd = app.add_subcommand("couple-test", "Check monotone coupling of two clique chains");
    couple_cmd->add_option("--n", cp.n)->required();
    couple_cmd->add_option("--lambda-lo", cp.lambda_lo)->required();
    couple_cmd->add_option("--lambda-hi", cp.lambda_hi)->required();
    couple_cmd->add_option("--alpha", cp.alpha)->required();
    couple_cmd->add_option("--runs", cp.runs)->required();
    couple_cmd->add_option("--seed", cp.seed);
    couple_cmd->add_option("--i0-lo", cp.i0_lo);
    couple_cmd->add_option("--i0-hi", cp.i0_hi);
    couple_cmd->add_option("--t-max", cp.t_max);
    couple_cmd->add_option("--max-jumps", cp.max_jumps);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (simulate_cmd->parsed())
            return cmd_simulate(sim, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(sw, out);
        if (oracle_cmd->parsed())
            return cmd_oracle(oracle_op, orc, out);
        if (couple_cmd->parsed())
            return cmd_couple_test(cp, out);
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace nlsis::cli
