#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hqlat/version.hpp"
#include "hqlat_cli/commands.hpp"

namespace {

std::string reconstruct_command_line(int argc, char** argv) {
  std::string line = std::filesystem::path(argv[0]).filename().string();
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    line += ' ';
    if (arg.find_first_of(" \t") != std::string::npos) {
      line += '\'' + arg + '\'';
    } else {
      line += arg;
    }
  }
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid-lattice: polariton transport on a resonator-TLS chain"};
  app.set_version_flag("--version", std::string(hqlat::kVersion));
  app.require_subcommand(1);

  hqlat_cli::CliOptions options;
  options.command_line = reconstruct_command_line(argc, argv);

  const auto add_config_flags = [&options](CLI::App* sub) {
    sub->add_option("--scenario", options.scenario,
                    "preset name (fig2-polariton .. fig7-split, or fig2..fig7)");
    sub->add_option("--config", options.config_path, "key = value config file");
    sub->add_option("--tau", options.tau, "Trotter step (absolute time)");
    sub->add_option("--t-final", options.t_final, "total evolved time (absolute)");
    sub->add_option("--chi-max", options.chi_max, "bond-dimension cap");
    sub->add_option("--epsilon0", options.epsilon0, "Schmidt-coefficient discard threshold");
    sub->add_option("--stride", options.stride, "steps between samples");
  };
  const auto add_output_flags = [&options](CLI::App* sub) {
    sub->add_option("--out", options.out_dir, "output directory");
    sub->add_flag("--emit-plotscript", options.emit_plotscript,
                  "also write a matplotlib script next to the CSVs");
  };

  CLI::App* simulate =
      app.add_subcommand("simulate", "evolve one configuration and write CSV artifacts");
  add_config_flags(simulate);
  add_output_flags(simulate);

  CLI::App* check = app.add_subcommand(
      "check-conditions", "compare configured couplings against their analytic targets");
  add_config_flags(check);

  CLI::App* compare = app.add_subcommand(
      "compare-oracle", "run the tensor-network evolution against dense diagonalization");
  add_config_flags(compare);

  CLI::App* sweep =
      app.add_subcommand("sweep", "run a parameter grid, one subdirectory per point");
  add_config_flags(sweep);
  add_output_flags(sweep);
  sweep->add_option("--param", options.sweep_params,
                    "grid axis key=v1,v2,... (repeatable; cartesian product)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed invocation is a config error
  }

  try {
    if (simulate->parsed()) return hqlat_cli::cmd_simulate(options);
    if (check->parsed()) return hqlat_cli::cmd_check_conditions(options);
    if (compare->parsed()) return hqlat_cli::cmd_compare_oracle(options);
    return hqlat_cli::cmd_sweep(options);
  } catch (...) {
    return hqlat_cli::exit_code_for_current_exception(std::cerr);
  }
}
