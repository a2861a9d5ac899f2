#pragma once

// Configuration ingestion for the hybrid-lattice tool.
//
// Config files are flat `key = value` text with `#` comments.  Section
// headers `[left]` / `[right]` scope the per-section resonator parameters
// (omega, omega0, g, v); a `[right]` section makes the lattice two-section.
// Top-level keys:
//
//   scenario            start from a named preset, then override
//   label               run label (CSV/manifest metadata)
//   L                   number of lattice sites (activation qubit included)
//   n_max               photon cutoff per resonator
//   activation_qubit    true/false
//   omega_A, lambda     activation-qubit frequency and coupling
//   lambda_C            interface bond coupling (two-section)
//   section_boundary    1-based last site of the left section
//   initial_state       activation_excited | centered_polariton
//   regime              resonant-polariton | dispersive-photon | dispersive-spinwave
//   tau, t_final        step size and total evolved time (absolute units)
//   chi_max, epsilon0   truncation policy
//   measure_stride      steps between samples
//   observables         comma list of tls, photon, polariton, branches
//   time_unit           multiplier applied to the exported time column
//   frame_shift         auto | <energy per excitation subtracted during evolution>
//
// Unknown keys are rejected, not ignored.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hqlat/scenario.hpp"
#include "hqlat/tebd.hpp"

namespace hqlat_cli {

// Invalid configuration input; the CLI maps it to exit code 2.  Messages
// name the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fully resolved run description.
struct RunConfig {
  hqlat::ScenarioSpec spec;
  hqlat::ObservableSet observables;
  std::optional<double> frame_shift;  // unset = automatic
  std::string out_dir;
  bool emit_plotscript = false;
};

// Accumulates keys from preset, file, and command line before resolution.
class ConfigBuilder {
 public:
  // `scenario` may be empty (explicit-parameter mode).
  void set_scenario(std::string_view name);

  // Parses one config file into the builder (section-aware).
  void load_file(const std::string& path);

  // Applies one key; `key` may carry a `left.` / `right.` prefix.  Used for
  // file lines, CLI overrides, and sweep parameters alike.
  void set(std::string_view key, std::string_view value);

  // Resolves to a validated RunConfig.  Explicit mode requires L, the left
  // section, tau and t_final; qubit/two-section keys when those features are
  // enabled.
  RunConfig resolve() const;

  // True when a scenario preset was named.
  bool has_scenario() const { return scenario_.has_value(); }

 private:
  struct Section {
    std::optional<double> omega, omega0, g, v;
  };

  void set_sectioned(Section& s, std::string_view key, std::string_view value,
                     std::string_view prefix);

  std::optional<std::string> scenario_, label_, initial_, regime_, observables_,
      frame_shift_;
  std::optional<int> num_sites_, n_max_, chi_max_, boundary_;
  std::optional<long long> stride_;
  std::optional<bool> qubit_;
  std::optional<double> omega_a_, lambda_, lambda_c_, tau_, t_final_, epsilon0_,
      time_unit_;
  Section left_, right_;
  bool right_present_ = false;
};

// Shortest-round-trip decimal rendering (manifest values re-parse exactly).
std::string format_double(double x);

// The resolved-parameter block of a manifest; parseable as a config file.
std::string manifest_body(const RunConfig& config);

// Splits "key=v1,v2,..." sweep parameters.
struct SweepParam {
  std::string key;
  std::vector<std::string> values;
};
SweepParam parse_sweep_param(std::string_view text);

}  // namespace hqlat_cli
