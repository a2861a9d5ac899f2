#pragma once

// Bundled lattice/run descriptions.  A ScenarioSpec is the fully resolved
// parameter record (also the vocabulary of the CLI config files); presets
// cover the demonstration setups shipped with the tool:
//
//   fig2-polariton  resonant chain, qubit launches a lower-branch polariton
//   fig3-photon     far red-detuned TLS: photon-like carrier, frozen TLSs
//   fig4-spinwave   far blue-detuned resonators: bare spin-wave carrier
//   fig6-swap       two sections joined by an impedance-matched interface
//   fig7-split      qubit-free two-section chain, centred polariton launch
//
// Times are absolute (ħ = 1); `time_unit` scales the exported time axis to
// units of 1/v.

#include <string>
#include <string_view>
#include <vector>

#include "hqlat/jc.hpp"
#include "hqlat/lattice.hpp"
#include "hqlat/mps.hpp"

namespace hqlat {

struct SectionParams {
  double omega = 0.0;
  double omega0 = 0.0;
  double g = 0.0;
  double v = 0.0;  // TLS-TLS exchange within the section
};

struct ScenarioSpec {
  std::string label;
  int num_sites = 0;
  int n_max = 2;

  bool has_qubit = false;
  double omega_A = 0.0;
  double lambda = 0.0;  // qubit-chain coupling

  SectionParams left;
  bool two_section = false;
  SectionParams right;
  double lambda_C = 0.0;     // interface bond coupling
  int section_boundary = 0;  // 1-based last site of the left section (L if single)

  InitialStateKind initial = InitialStateKind::activation_excited;
  Regime regime = Regime::resonant_polariton;

  double tau = 0.0;
  double t_final = 0.0;
  long long measure_stride = 1;
  TruncationPolicy policy;
  double time_unit = 1.0;  // CSV time column = t · time_unit

  void validate() const;
};

// Lattice construction from a resolved record (validates first).
LatticeSpec build_lattice(const ScenarioSpec& spec);

// Named preset; accepts the full names above or the short aliases
// fig2/fig3/fig4/fig6/fig7.  Throws std::invalid_argument for unknown names.
ScenarioSpec scenario_preset(std::string_view name);

std::vector<std::string> scenario_names();

}  // namespace hqlat
