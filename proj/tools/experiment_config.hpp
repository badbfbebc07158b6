#pragma once

#include "nlsis/sweep.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace nlsis::cli {

/// Sweep experiment read from a flat `key = value` file. `#` starts a
/// comment; `n` takes a comma-separated list.
///
/// Required: topology, n, alpha, lambda, runs, t_max, max_jumps.
/// Optional: init (one), master_seed, confidence (0.95), engine (gillespie),
/// output (stdout when absent).
struct ExperimentSpec {
    SweepSpec sweep;
    bool has_master_seed = false;
    std::optional<std::string> output;
};

ExperimentSpec parse_experiment_config(std::istream& in);
ExperimentSpec load_experiment_config(const std::string& path);

/// Comment block that precedes the CSV. Lines `# config: key = value`
/// reproduce the run when the prefix is stripped; `# derived:` lines give
/// the per-row lambda and t_max.
void write_config_echo(std::ostream& out, const ExperimentSpec& spec, std::span<const SweepRow> rows);

}  // namespace nlsis::cli
