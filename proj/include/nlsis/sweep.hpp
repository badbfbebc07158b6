#pragma once

#include "nlsis/analysis.hpp"
#include "nlsis/estimator.hpp"

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nlsis {

enum class LambdaRuleKind { literal, clique_fast, clique_slow, star_fast, star_slow };

/// lambda = constant (literal) or constant * threshold_lambda(...).
struct LambdaRule {
    LambdaRuleKind kind = LambdaRuleKind::literal;
    double constant = 0.0;
};

/// Accepts `0.25`, `clique_slow`, `clique_slow * 4`, `4 * clique_slow`.
LambdaRule parse_lambda_rule(std::string_view text);
std::string to_string(const LambdaRule& rule);
double resolve_lambda(const LambdaRule& rule, std::size_t n, double alpha);

/// t_max = constant * n^exponent. Accepts `1000`, `n^2`, `n^2 * 4`, `4 * n^2`.
struct TMaxRule {
    double exponent = 0.0;
    double constant = 0.0;
};

TMaxRule parse_t_max_rule(std::string_view text);
std::string to_string(const TMaxRule& rule);
double resolve_t_max(const TMaxRule& rule, std::size_t n);

/// `one`: one infected vertex (a leaf on stars, center healthy).
/// `center`: star center infected, no leaves.
/// `count:k`: k infected vertices (leaves on stars, center healthy).
struct InitRule {
    enum class Kind { one, center, count } kind = Kind::one;
    std::size_t count = 1;
};

InitRule parse_init_rule(std::string_view text);
std::string to_string(const InitRule& rule);
CliqueState resolve_clique_init(const InitRule& rule, std::size_t n);
StarState resolve_star_init(const InitRule& rule, std::size_t leaves);

GraphKind parse_graph_kind(std::string_view text);
std::string to_string(GraphKind kind);
Engine parse_engine(std::string_view text);
std::string to_string(Engine engine);

struct SweepSpec {
    GraphKind topology = GraphKind::clique;
    std::vector<std::size_t> n_grid;
    double alpha = 0.0;
    LambdaRule lambda;
    InitRule init;
    std::size_t runs = 0;
    TMaxRule t_max;
    std::uint64_t max_jumps = 0;
    std::uint64_t master_seed = 0;
    double confidence = 0.95;
    Engine engine = Engine::gillespie;
};

void validate(const SweepSpec& spec);

struct SweepRow {
    GraphKind topology;
    std::size_t n;
    double lambda;
    double alpha;
    InitRule init;
    std::uint64_t max_jumps;
    SurvivalStats stats;
};

/// One row per grid point in grid order. Every point runs with the spec's
/// master seed, so a one-point sweep equals estimate_survival.
std::vector<SweepRow> sweep(const SweepSpec& spec, Execution execution = Execution::parallel);

inline constexpr std::string_view kSweepCsvHeader =
    "topology,n,lambda,alpha,init,runs,t_max,max_jumps,master_seed,mean_censored,median,q10,q90,"
    "censored_fraction,ci_halfwidth";

/// Header line plus one line per row. A censored median is written as
/// `>t_max`.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace nlsis
