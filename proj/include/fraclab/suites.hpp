#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fraclab/config.hpp"
#include "fraclab/report.hpp"

namespace fraclab {

enum class Suite { all, limits, interpolation, counterexample, backends };

/// Throws ConfigError for unknown names.
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

/// Runs one suite (not `all`). A check that throws is recorded as a
/// failing diagnostic row and the suite carries on.
Report run_suite(Suite s, const RunConfig& cfg);

/// Exit codes for the command line: every check passed, some check failed,
/// bad usage or configuration.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Loads the config (built-in defaults when no path is given), runs the
/// suite and writes <out>/<suite>.csv and <out>/<suite>_summary.txt per
/// suite run. `out_dir` overrides the configured output directory.
int cmd_verify(const std::string& suite, const std::optional<std::string>& config_path,
               const std::optional<std::string>& out_dir, std::ostream& log);

}  // namespace fraclab
