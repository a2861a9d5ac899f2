#pragma once

// Writers for the on-disk artifacts of one run: per-observable CSV files,
// a resolved-parameter manifest, and (on request) a plotting script.
//
// Per-site CSV header: `time,site_2,...,site_L` (site_1 is the activation
// qubit, reported in activation.csv) or `time,site_1,...,site_L` for a
// qubit-less lattice.  The scalar ledger file is
// `time,norm,energy,total_excitation,eps_trunc`.  Values carry 12
// significant digits; the time column is scaled by the configured time unit.

#include <string>

#include "hqlat/tebd.hpp"
#include "hqlat_cli/run_config.hpp"

namespace hqlat_cli {

// Creates `config.out_dir` (and parents) and writes every artifact of the
// run: observable CSVs, scalars.csv, manifest.cfg, and plot.py when
// requested.  `command_line` and `wall_seconds` land in the manifest header.
void write_run_outputs(const RunConfig& config, const hqlat::RunResult& result,
                       const std::string& command_line, double wall_seconds);

// The manifest text: a comment header (tool version, command, timing,
// ledger summary) followed by the resolved parameters.  Feeding the file
// back through `--config` reproduces the same resolved parameters.
std::string manifest_text(const RunConfig& config, const hqlat::RunResult& result,
                          const std::string& command_line, double wall_seconds);

// Self-contained matplotlib script that renders whichever CSVs are present
// in its directory.
std::string plot_script_text();

}  // namespace hqlat_cli
