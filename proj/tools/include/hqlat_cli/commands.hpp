#pragma once

// Subcommand implementations behind the command-line front end.  Each
// returns the process exit code:
//   0  success
//   1  a checked condition or deviation threshold failed
//   2  configuration error
//   3  numerical failure
//   4  resource limit
// Configuration problems are reported by throwing (the front end maps
// exception types to codes); returns of 1 are reserved for well-formed runs
// whose checked quantities miss their targets.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hqlat_cli {

// Options shared by the subcommands, mirroring the command-line flags.
struct CliOptions {
  std::string scenario;
  std::string config_path;
  std::string out_dir;
  std::optional<double> tau;
  std::optional<double> t_final;
  std::optional<int> chi_max;
  std::optional<double> epsilon0;
  std::optional<long long> stride;
  bool emit_plotscript = false;
  std::vector<std::string> sweep_params;  // raw key=v1,v2,... (sweep only)
  std::string command_line;               // echoed into manifests
};

int cmd_simulate(const CliOptions& options);
int cmd_check_conditions(const CliOptions& options);
int cmd_compare_oracle(const CliOptions& options);
int cmd_sweep(const CliOptions& options);

// Maps the shared exception taxonomy to an exit code, printing the message
// (and step/bond diagnostics for evolution failures) to `err`.
int exit_code_for_current_exception(std::ostream& err);

}  // namespace hqlat_cli
