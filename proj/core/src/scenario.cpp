#include "hqlat/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hqlat {

namespace {

// Default sampling cadence: one sample per 0.1/v of evolved time.
long long default_stride(double v, double tau) {
  const double unit = std::abs(v) > 0.0 ? std::abs(v) : 1.0;
  return std::max<long long>(1, static_cast<long long>(std::ceil(0.1 / (unit * tau) - 1e-9)));
}

ScenarioSpec resonant_polariton_chain() {
  // Resonant lower-branch polariton transport: ω = ω0, g = 4v keeps the
  // upper branch out of reach, the qubit sits at ω − g and couples with
  // λ = v ρ_1− = −v/√2.
  ScenarioSpec s;
  s.label = "fig2-polariton";
  s.num_sites = 26;
  s.left = {1.0, 1.0, 0.04, 0.01};
  s.has_qubit = true;
  const MatchingConditions m = matching_conditions(JCParams(1.0, 1.0, 0.04), s.left.v,
                                                   Regime::resonant_polariton);
  s.omega_A = m.omega_A;
  s.lambda = m.lambda;
  s.section_boundary = s.num_sites;
  s.initial = InitialStateKind::activation_excited;
  s.regime = Regime::resonant_polariton;
  s.tau = 0.2;
  s.t_final = 100.0 / s.left.v;
  s.measure_stride = default_stride(s.left.v, s.tau);
  s.time_unit = s.left.v;
  return s;
}

ScenarioSpec dispersive_photon_chain() {
  // Photon-like carrier: TLSs far red-detuned (Δ = −9ω/10·...), transport
  // via the small TLS admixture, effective hopping v ρ_1−².  The window is
  // long enough for the slow pulse to cross most of the chain.
  ScenarioSpec s;
  s.label = "fig3-photon";
  s.num_sites = 26;
  s.left = {10.0, 1.0, 0.8, 0.5};
  s.has_qubit = true;
  const MatchingConditions m = matching_conditions(JCParams(10.0, 1.0, 0.8), s.left.v,
                                                   Regime::dispersive_photon);
  s.omega_A = m.omega_A;
  s.lambda = m.lambda;
  s.section_boundary = s.num_sites;
  s.initial = InitialStateKind::activation_excited;
  s.regime = Regime::dispersive_photon;
  s.tau = 0.02;
  s.t_final = 1200.0 / s.left.v;
  // The slow dispersive carrier needs a long window; sample every Δ(tv) = 1.
  s.measure_stride = 10 * default_stride(s.left.v, s.tau);
  s.time_unit = s.left.v;
  return s;
}

ScenarioSpec dispersive_spinwave_chain() {
  // Bare spin-wave carrier: resonators far blue-detuned, the TLS excitation
  // hops directly with v; the qubit couples undressed (ω_A = ω0, λ = v).
  ScenarioSpec s;
  s.label = "fig4-spinwave";
  s.num_sites = 26;
  s.left = {1.0, 10.0, 0.05, 0.02};
  s.has_qubit = true;
  const MatchingConditions m = matching_conditions(JCParams(1.0, 10.0, 0.05), s.left.v,
                                                   Regime::dispersive_spinwave);
  s.omega_A = m.omega_A;
  s.lambda = m.lambda;
  s.section_boundary = s.num_sites;
  s.initial = InitialStateKind::activation_excited;
  s.regime = Regime::dispersive_spinwave;
  s.tau = 1e-3 / s.left.v;
  s.t_final = 100.0 / s.left.v;
  s.measure_stride = default_stride(s.left.v, s.tau);
  s.time_unit = s.left.v;
  return s;
}

ScenarioSpec swap_interface_chain() {
  // Polariton section (sites 2-15) handed over to a spin-wave section
  // (16-31) through an impedance-matched interface bond: λ_C = v_l ρ_1−,
  // v_r = ρ_1− λ_C = v_l/2 on resonance.  The right resonators are far
  // detuned (ω_r = 50 ω0_r) so the carrier arrives as a bare spin wave at
  // the polariton energy ω0_r = ω_l − g_l.  The window ends before the
  // reflection off the far end returns to the interface.
  ScenarioSpec s;
  s.label = "fig6-swap";
  s.num_sites = 31;
  s.n_max = 2;
  s.left = {1.0, 1.0, 0.2, 0.05};
  const JCParams left_jc(1.0, 1.0, 0.2);
  const MatchingConditions m =
      matching_conditions(left_jc, s.left.v, Regime::resonant_polariton);
  const SwapInterface iface = swap_interface(left_jc, s.left.v);
  s.has_qubit = true;
  s.omega_A = m.omega_A;
  s.lambda = m.lambda;
  s.two_section = true;
  s.section_boundary = 15;
  s.lambda_C = iface.lambda_C;
  s.right = {50.0 * m.omega_A, m.omega_A, s.left.g, iface.v_right};
  s.initial = InitialStateKind::activation_excited;
  s.regime = Regime::resonant_polariton;
  s.tau = 0.04;
  s.t_final = 42.5 / s.left.v;
  s.measure_stride = default_stride(s.left.v, s.tau);
  s.time_unit = s.left.v;
  return s;
}

ScenarioSpec split_pulse_chain() {
  // Qubit-free variant: a lower-branch polariton prepared at the centre
  // site (16) splits and propagates as a polariton into the resonant left
  // section and as a spin wave into the detuned right section.
  ScenarioSpec s;
  s.label = "fig7-split";
  s.num_sites = 31;
  s.n_max = 2;
  s.left = {1.0, 1.0, 0.04, 0.01};
  const JCParams left_jc(1.0, 1.0, 0.04);
  const SwapInterface iface = swap_interface(left_jc, s.left.v);
  const double pol_energy =
      matching_conditions(left_jc, s.left.v, Regime::resonant_polariton).omega_A;
  s.has_qubit = false;
  s.two_section = true;
  s.section_boundary = 16;  // centre site belongs to the resonant section
  s.lambda_C = iface.lambda_C;
  s.right = {50.0 * pol_energy, pol_energy, s.left.g, iface.v_right};
  s.initial = InitialStateKind::centered_polariton;
  s.regime = Regime::resonant_polariton;
  s.tau = 0.2;
  s.t_final = 150.0 / s.left.v;
  s.measure_stride = default_stride(s.left.v, s.tau);
  s.time_unit = s.left.v;
  return s;
}

}  // namespace

void ScenarioSpec::validate() const {
  if (num_sites < 2) {
    throw std::invalid_argument("ScenarioSpec: need at least 2 sites");
  }
  if (n_max < 1) {
    throw std::invalid_argument("ScenarioSpec: n_max must be >= 1");
  }
  if (section_boundary < 1 || section_boundary > num_sites) {
    throw std::invalid_argument("ScenarioSpec: section boundary outside the lattice");
  }
  if (two_section && section_boundary >= num_sites) {
    throw std::invalid_argument(
        "ScenarioSpec: two-section lattice needs a boundary before the last site");
  }
  if (has_qubit && section_boundary < 2) {
    throw std::invalid_argument(
        "ScenarioSpec: left section must contain at least one jc unit");
  }
  if (initial == InitialStateKind::activation_excited && !has_qubit) {
    throw std::invalid_argument(
        "ScenarioSpec: activation-excited initial state requires an activation qubit");
  }
  if (initial == InitialStateKind::centered_polariton && has_qubit) {
    throw std::invalid_argument(
        "ScenarioSpec: centered-polariton initial state requires a qubit-free lattice");
  }
}

LatticeSpec build_lattice(const ScenarioSpec& spec) {
  spec.validate();
  LatticeSpec lat;
  lat.label = spec.label;
  const auto jc_of = [](const SectionParams& p) { return JCParams(p.omega, p.omega0, p.g); };

  for (int j = 0; j < spec.num_sites; ++j) {
    if (spec.has_qubit && j == 0) {
      lat.sites.push_back(SiteSpec::activation(spec.omega_A));
      continue;
    }
    const bool in_left = (j + 1) <= spec.section_boundary;
    lat.sites.push_back(
        SiteSpec::jc_unit(jc_of(in_left ? spec.left : spec.right), spec.n_max));
  }
  for (int b = 0; b + 1 < spec.num_sites; ++b) {
    double coupling = 0.0;
    if (spec.has_qubit && b == 0) {
      coupling = spec.lambda;
    } else if (spec.two_section && (b + 1) == spec.section_boundary) {
      coupling = spec.lambda_C;  // interface bond
    } else if ((b + 1) < spec.section_boundary) {
      coupling = spec.left.v;
    } else {
      coupling = spec.two_section ? spec.right.v : spec.left.v;
    }
    lat.bonds.push_back({b, coupling});
  }
  lat.validate();
  return lat;
}

ScenarioSpec scenario_preset(std::string_view name) {
  if (name == "fig2-polariton" || name == "fig2") return resonant_polariton_chain();
  if (name == "fig3-photon" || name == "fig3") return dispersive_photon_chain();
  if (name == "fig4-spinwave" || name == "fig4") return dispersive_spinwave_chain();
  if (name == "fig6-swap" || name == "fig6") return swap_interface_chain();
  if (name == "fig7-split" || name == "fig7") return split_pulse_chain();
  throw std::invalid_argument("scenario_preset: unknown scenario '" + std::string(name) +
                              "'");
}

std::vector<std::string> scenario_names() {
  return {"fig2-polariton", "fig3-photon", "fig4-spinwave", "fig6-swap", "fig7-split"};
}

}  // namespace hqlat
