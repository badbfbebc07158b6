#include "experiment_config.hpp"

#include "nlsis/format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlsis::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_integer(const std::string& key, const std::string& text)
{
    T value{};
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || result.ec != std::errc() || result.ptr != text.data() + text.size())
        throw std::invalid_argument("config key '" + key + "': expected a non-negative integer, got '" + text + "'");
    return value;
}

double parse_real(const std::string& key, const std::string& text)
{
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || result.ec != std::errc() || result.ptr != text.data() + text.size() || !std::isfinite(value))
        throw std::invalid_argument("config key '" + key + "': expected a number, got '" + text + "'");
    return value;
}

const std::set<std::string> kKnownKeys = {"topology", "n",         "alpha",      "lambda", "init",  "runs",
                                          "t_max",    "max_jumps", "master_seed", "confidence", "engine", "output"};
const std::set<std::string> kRequiredKeys = {"topology", "n", "alpha", "lambda", "runs", "t_max", "max_jumps"};

}  // namespace

ExperimentSpec parse_experiment_config(std::istream& in)
{
    std::map<std::string, std::string> values;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(number) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.contains(key))
            throw std::invalid_argument("config line " + std::to_string(number) + ": unknown key '" + key + "'");
        if (!values.emplace(key, value).second)
            throw std::invalid_argument("config line " + std::to_string(number) + ": duplicate key '" + key + "'");
    }
    for (const std::string& key : kRequiredKeys)
        if (!values.contains(key))
            throw std::invalid_argument("config is missing required key '" + key + "'");

    ExperimentSpec spec;
    SweepSpec& s = spec.sweep;
    s.topology = parse_graph_kind(values["topology"]);
    std::stringstream grid(values["n"]);
    for (std::string item; std::getline(grid, item, ',');)
        s.n_grid.push_back(parse_integer<std::size_t>("n", trim(item)));
    s.alpha = parse_real("alpha", values["alpha"]);
    s.lambda = parse_lambda_rule(values["lambda"]);
    if (values.contains("init"))
        s.init = parse_init_rule(values["init"]);
    s.runs = parse_integer<std::size_t>("runs", values["runs"]);
    s.t_max = parse_t_max_rule(values["t_max"]);
    s.max_jumps = parse_integer<std::uint64_t>("max_jumps", values["max_jumps"]);
    if (values.contains("master_seed")) {
        s.master_seed = parse_integer<std::uint64_t>("master_seed", values["master_seed"]);
        spec.has_master_seed = true;
    }
    if (values.contains("confidence"))
        s.confidence = parse_real("confidence", values["confidence"]);
    if (values.contains("engine"))
        s.engine = parse_engine(values["engine"]);
    if (values.contains("output") && !values["output"].empty())
        spec.output = values["output"];
    validate(s);
    return spec;
}

ExperimentSpec load_experiment_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    return parse_experiment_config(in);
}

void write_config_echo(std::ostream& out, const ExperimentSpec& spec, std::span<const SweepRow> rows)
{
    const SweepSpec& s = spec.sweep;
    std::string grid;
    for (std::size_t i = 0; i < s.n_grid.size(); ++i)
        grid += (i ? "," : "") + std::to_string(s.n_grid[i]);
    out << "# config: topology = " << to_string(s.topology) << '\n'
        << "# config: n = " << grid << '\n'
        << "# config: alpha = " << format_double(s.alpha) << '\n'
        << "# config: lambda = " << to_string(s.lambda) << '\n'
        << "# config: init = " << to_string(s.init) << '\n'
        << "# config: runs = " << s.runs << '\n'
        << "# config: t_max = " << to_string(s.t_max) << '\n'
        << "# config: max_jumps = " << s.max_jumps << '\n'
        << "# config: master_seed = " << s.master_seed << '\n'
        << "# config: confidence = " << format_double(s.confidence) << '\n'
        << "# config: engine = " << to_string(s.engine) << '\n';
    for (const SweepRow& row : rows)
        out << "# derived: n=" << row.n << " lambda=" << format_double(row.lambda)
            << " t_max=" << format_double(row.stats.t_max) << '\n';
}

}  // namespace nlsis::cli
