#include "nlsis/sweep.hpp"

#include "nlsis/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nlsis {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view text, double& value)
{
    text = trim(text);
    if (text.empty())
        return false;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    return result.ec == std::errc() && result.ptr == text.data() + text.size() && std::isfinite(value);
}

// Splits `a * b` into its two factors; a single factor leaves `right` empty.
void split_product(std::string_view text, std::string_view& left, std::string_view& right)
{
    const auto star = text.find('*');
    if (star == std::string_view::npos) {
        left = trim(text);
        right = {};
        return;
    }
    left = trim(text.substr(0, star));
    right = trim(text.substr(star + 1));
    if (right.find('*') != std::string_view::npos)
        throw std::invalid_argument("expected at most one '*' in '" + std::string(text) + "'");
}

bool lambda_formula(std::string_view name, LambdaRuleKind& kind)
{
    if (name == "clique_fast")
        kind = LambdaRuleKind::clique_fast;
    else if (name == "clique_slow")
        kind = LambdaRuleKind::clique_slow;
    else if (name == "star_fast")
        kind = LambdaRuleKind::star_fast;
    else if (name == "star_slow")
        kind = LambdaRuleKind::star_slow;
    else
        return false;
    return true;
}

std::string_view lambda_formula_name(LambdaRuleKind kind)
{
    switch (kind) {
    case LambdaRuleKind::clique_fast: return "clique_fast";
    case LambdaRuleKind::clique_slow: return "clique_slow";
    case LambdaRuleKind::star_fast: return "star_fast";
    case LambdaRuleKind::star_slow: return "star_slow";
    case LambdaRuleKind::literal: break;
    }
    return "literal";
}

bool power_of_n(std::string_view text, double& exponent)
{
    if (text == "n") {
        exponent = 1.0;
        return true;
    }
    if (text.size() > 2 && text.substr(0, 2) == "n^")
        return parse_number(text.substr(2), exponent);
    return false;
}

}  // namespace

LambdaRule parse_lambda_rule(std::string_view text)
{
    std::string_view left, right;
    split_product(text, left, right);
    LambdaRule rule;
    double value = 0.0;
    if (right.empty()) {
        if (lambda_formula(left, rule.kind)) {
            rule.constant = 1.0;
            return rule;
        }
        if (parse_number(left, value) && value >= 0.0)
            return {LambdaRuleKind::literal, value};
    } else if (lambda_formula(left, rule.kind) && parse_number(right, value) && value > 0.0) {
        rule.constant = value;
        return rule;
    } else if (lambda_formula(right, rule.kind) && parse_number(left, value) && value > 0.0) {
        rule.constant = value;
        return rule;
    }
    throw std::invalid_argument("unknown lambda rule '" + std::string(text) +
                                "' (expected a number or clique_fast|clique_slow|star_fast|star_slow [* c])");
}

std::string to_string(const LambdaRule& rule)
{
    if (rule.kind == LambdaRuleKind::literal)
        return format_double(rule.constant);
    return std::string(lambda_formula_name(rule.kind)) + " * " + format_double(rule.constant);
}

double resolve_lambda(const LambdaRule& rule, std::size_t n, double alpha)
{
    switch (rule.kind) {
    case LambdaRuleKind::literal: return rule.constant;
    case LambdaRuleKind::clique_fast:
        return rule.constant * threshold_lambda(GraphKind::clique, n, alpha, ThresholdSide::fast);
    case LambdaRuleKind::clique_slow:
        return rule.constant * threshold_lambda(GraphKind::clique, n, alpha, ThresholdSide::slow);
    case LambdaRuleKind::star_fast:
        return rule.constant * threshold_lambda(GraphKind::star, n, alpha, ThresholdSide::fast);
    case LambdaRuleKind::star_slow:
        return rule.constant * threshold_lambda(GraphKind::star, n, alpha, ThresholdSide::slow);
    }
    throw std::logic_error("unhandled lambda rule");
}

TMaxRule parse_t_max_rule(std::string_view text)
{
    std::string_view left, right;
    split_product(text, left, right);
    TMaxRule rule;
    double value = 0.0;
    if (right.empty()) {
        if (power_of_n(left, rule.exponent)) {
            rule.constant = 1.0;
            return rule;
        }
        if (parse_number(left, value) && value > 0.0)
            return {0.0, value};
    } else if (power_of_n(left, rule.exponent) && parse_number(right, value) && value > 0.0) {
        rule.constant = value;
        return rule;
    } else if (power_of_n(right, rule.exponent) && parse_number(left, value) && value > 0.0) {
        rule.constant = value;
        return rule;
    }
    throw std::invalid_argument("invalid t_max rule '" + std::string(text) + "' (expected a number or n^k [* c])");
}

std::string to_string(const TMaxRule& rule)
{
    if (rule.exponent == 0.0)
        return format_double(rule.constant);
    return "n^" + format_double(rule.exponent) + " * " + format_double(rule.constant);
}

double resolve_t_max(const TMaxRule& rule, std::size_t n)
{
    return rule.constant * std::pow(static_cast<double>(n), rule.exponent);
}

InitRule parse_init_rule(std::string_view text)
{
    text = trim(text);
    if (text == "one")
        return {InitRule::Kind::one, 1};
    if (text == "center")
        return {InitRule::Kind::center, 0};
    if (text.substr(0, 6) == "count:") {
        const std::string_view digits = text.substr(6);
        std::size_t k = 0;
        const auto result = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (!digits.empty() && result.ec == std::errc() && result.ptr == digits.data() + digits.size())
            return {InitRule::Kind::count, k};
    }
    throw std::invalid_argument("invalid init rule '" + std::string(text) + "' (expected one|center|count:<k>)");
}

std::string to_string(const InitRule& rule)
{
    switch (rule.kind) {
    case InitRule::Kind::one: return "one";
    case InitRule::Kind::center: return "center";
    case InitRule::Kind::count: break;
    }
    return "count:" + std::to_string(rule.count);
}

CliqueState resolve_clique_init(const InitRule& rule, std::size_t n)
{
    if (rule.kind == InitRule::Kind::center)
        throw std::invalid_argument("init 'center' requires a star topology");
    const CliqueState state{rule.kind == InitRule::Kind::one ? 1 : rule.count};
    validate_state(CliqueChain{n}, state);
    return state;
}

StarState resolve_star_init(const InitRule& rule, std::size_t leaves)
{
    StarState state{0, false};
    if (rule.kind == InitRule::Kind::center)
        state.center_infected = true;
    else
        state.infected_leaves = rule.kind == InitRule::Kind::one ? 1 : rule.count;
    validate_state(StarChain{leaves}, state);
    return state;
}

GraphKind parse_graph_kind(std::string_view text)
{
    text = trim(text);
    if (text == "clique")
        return GraphKind::clique;
    if (text == "star")
        return GraphKind::star;
    throw std::invalid_argument("sweep topology must be clique or star, got '" + std::string(text) + "'");
}

std::string to_string(GraphKind kind)
{
    return kind == GraphKind::clique ? "clique" : "star";
}

Engine parse_engine(std::string_view text)
{
    text = trim(text);
    if (text == "gillespie")
        return Engine::gillespie;
    if (text == "exact_fast")
        return Engine::exact_fast;
    throw std::invalid_argument("engine must be gillespie or exact_fast, got '" + std::string(text) + "'");
}

std::string to_string(Engine engine)
{
    return engine == Engine::gillespie ? "gillespie" : "exact_fast";
}

void validate(const SweepSpec& spec)
{
    if (spec.n_grid.empty())
        throw std::invalid_argument("sweep grid over n is empty");
    for (std::size_t i = 1; i < spec.n_grid.size(); ++i)
        if (spec.n_grid[i] <= spec.n_grid[i - 1])
            throw std::invalid_argument("sweep grid over n must be strictly increasing");
    for (std::size_t n : spec.n_grid)
        validate_vertex_count(n, "n");
    // Throws on an invalid alpha or literal lambda.
    static_cast<void>(ProcessParams(spec.lambda.kind == LambdaRuleKind::literal ? spec.lambda.constant : 1.0,
                                    spec.alpha));
    if (spec.runs < 1)
        throw std::invalid_argument("runs must be >= 1");
    if (spec.max_jumps < 1)
        throw std::invalid_argument("max_jumps must be >= 1");
    if (!(spec.t_max.constant > 0.0))
        throw std::invalid_argument("t_max must be > 0");
}

std::vector<SweepRow> sweep(const SweepSpec& spec, Execution execution)
{
    validate(spec);
    std::vector<SweepRow> rows;
    for (std::size_t n : spec.n_grid) {
        const double lambda = resolve_lambda(spec.lambda, n, spec.alpha);
        const ProcessParams params(lambda, spec.alpha);
        const McConfig mc{spec.runs, resolve_t_max(spec.t_max, n), spec.max_jumps, spec.master_seed,
                          spec.confidence};
        SurvivalStats stats;
        if (spec.topology == GraphKind::clique)
            stats = estimate_survival(CliqueChain{n}, params, resolve_clique_init(spec.init, n), mc, spec.engine,
                                      execution);
        else
            stats = estimate_survival(StarChain{n}, params, resolve_star_init(spec.init, n), mc, spec.engine,
                                      execution);
        rows.push_back({spec.topology, n, lambda, spec.alpha, spec.init, spec.max_jumps, stats});
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows)
{
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        const SurvivalStats& s = r.stats;
        const std::string median =
            s.median_beyond_censor ? ">" + format_double(s.t_max) : format_double(s.median);
        out << to_string(r.topology) << ',' << r.n << ',' << format_double(r.lambda) << ','
            << format_double(r.alpha) << ',' << to_string(r.init) << ',' << s.runs << ','
            << format_double(s.t_max) << ',' << r.max_jumps << ',' << s.master_seed << ','
            << format_double(s.mean_censored) << ',' << median << ',' << format_double(s.q10) << ','
            << format_double(s.q90) << ',' << format_double(s.censored_fraction) << ','
            << format_double(s.ci_halfwidth) << '\n';
    }
}

}  // namespace nlsis
