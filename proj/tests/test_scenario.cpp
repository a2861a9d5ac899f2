#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hqlat/jc.hpp"
#include "hqlat/lattice.hpp"
#include "hqlat/scenario.hpp"

using namespace hqlat;

namespace {
constexpr double kSqrtHalf = 0.7071067811865476;
}

TEST_CASE("preset registry: names, aliases, unknown rejection") {
  const std::vector<std::string> names = scenario_names();
  REQUIRE(names == std::vector<std::string>{"fig2-polariton", "fig3-photon",
                                            "fig4-spinwave", "fig6-swap", "fig7-split"});
  const std::vector<std::string> aliases = {"fig2", "fig3", "fig4", "fig6", "fig7"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    const ScenarioSpec by_name = scenario_preset(names[i]);
    const ScenarioSpec by_alias = scenario_preset(aliases[i]);
    CHECK(by_name.label == names[i]);
    CHECK(by_alias.label == names[i]);
    CHECK_NOTHROW(by_name.validate());
    CHECK_NOTHROW(build_lattice(by_name));
  }
  CHECK_THROWS_AS(scenario_preset("fig5"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_preset(""), std::invalid_argument);
}

TEST_CASE("resonant polariton launch preset") {
  const ScenarioSpec s = scenario_preset("fig2");
  CHECK(s.num_sites == 26);
  CHECK(s.n_max == 2);
  CHECK(s.has_qubit);
  CHECK(!s.two_section);
  CHECK(s.section_boundary == 26);
  CHECK(s.left.omega == 1.0);
  CHECK(s.left.omega0 == 1.0);
  CHECK(s.left.g == 0.04);
  CHECK(s.left.v == 0.01);
  CHECK(s.omega_A == 0.96);
  CHECK(s.lambda == doctest::Approx(-0.01 * kSqrtHalf).epsilon(1e-15));
  // Derived couplings are bit-equal to the matching-condition outputs.
  const MatchingConditions m =
      matching_conditions(JCParams(1.0, 1.0, 0.04), 0.01, Regime::resonant_polariton);
  CHECK(s.omega_A == m.omega_A);
  CHECK(s.lambda == m.lambda);
  CHECK(s.initial == InitialStateKind::activation_excited);
  CHECK(s.regime == Regime::resonant_polariton);
  CHECK(s.tau == 0.2);
  CHECK(s.t_final == 10000.0);
  CHECK(s.measure_stride == 50);
  CHECK(s.time_unit == 0.01);

  const LatticeSpec lat = build_lattice(s);
  REQUIRE(lat.num_sites() == 26);
  CHECK(!lat.sites[0].is_jc());
  CHECK(lat.sites[0].omega_A == 0.96);
  for (int j = 1; j < 26; ++j) {
    CHECK(lat.sites[j].is_jc());
    CHECK(lat.sites[j].dim() == 6);
    CHECK(lat.sites[j].jc.g == 0.04);
  }
  CHECK(lat.bonds[0].coupling == s.lambda);
  for (int b = 1; b < 25; ++b) CHECK(lat.bonds[b].coupling == 0.01);
}

TEST_CASE("dispersive photon-carrier preset") {
  const ScenarioSpec s = scenario_preset("fig3");
  CHECK(s.num_sites == 26);
  CHECK(s.has_qubit);
  CHECK(s.left.omega == 10.0);
  CHECK(s.left.omega0 == 1.0);
  CHECK(s.left.g == 0.8);
  CHECK(s.left.v == 0.5);
  CHECK(s.omega_A == doctest::Approx(10.071111111111112).epsilon(1e-15));
  CHECK(s.lambda == doctest::Approx(0.043928197399411534).epsilon(1e-14));
  CHECK(s.regime == Regime::dispersive_photon);
  CHECK(s.tau == 0.02);
  CHECK(s.t_final == 2400.0);
  CHECK(s.measure_stride == 100);
  CHECK(s.time_unit == 0.5);
}

TEST_CASE("dispersive spin-wave-carrier preset") {
  const ScenarioSpec s = scenario_preset("fig4");
  CHECK(s.num_sites == 26);
  CHECK(s.left.omega == 1.0);
  CHECK(s.left.omega0 == 10.0);
  CHECK(s.left.g == 0.05);
  CHECK(s.left.v == 0.02);
  // Bare spin-wave carrier: the qubit couples undressed.
  CHECK(s.omega_A == 10.0);
  CHECK(s.lambda == 0.02);
  CHECK(s.regime == Regime::dispersive_spinwave);
  CHECK(s.tau == 0.05);
  CHECK(s.t_final == 5000.0);
  CHECK(s.measure_stride == 100);
  CHECK(s.time_unit == 0.02);
}

TEST_CASE("impedance-matched handover preset") {
  const ScenarioSpec s = scenario_preset("fig6");
  CHECK(s.num_sites == 31);
  CHECK(s.n_max == 2);
  CHECK(s.has_qubit);
  CHECK(s.two_section);
  CHECK(s.section_boundary == 15);
  CHECK(s.left.omega == 1.0);
  CHECK(s.left.omega0 == 1.0);
  CHECK(s.left.g == 0.2);
  CHECK(s.left.v == 0.05);
  CHECK(s.omega_A == 0.8);
  const SwapInterface iface = swap_interface(JCParams(1.0, 1.0, 0.2), 0.05);
  CHECK(s.lambda_C == iface.lambda_C);
  CHECK(s.lambda_C == doctest::Approx(-0.05 * kSqrtHalf).epsilon(1e-15));
  // Right section: far-detuned resonators, TLSs at the carrier energy,
  // exchange impedance-matched to exactly half the left coupling.
  CHECK(s.right.omega == 40.0);
  CHECK(s.right.omega0 == 0.8);
  CHECK(s.right.g == 0.2);
  CHECK(s.right.v == 0.025);
  CHECK(s.right.v == iface.v_right);
  CHECK(s.tau == 0.04);
  CHECK(s.t_final == 850.0);
  CHECK(s.measure_stride == 50);
  CHECK(s.time_unit == 0.05);

  const LatticeSpec lat = build_lattice(s);
  REQUIRE(lat.num_sites() == 31);
  REQUIRE(lat.num_bonds() == 30);
  CHECK(lat.bonds[0].coupling == s.lambda);
  for (int b = 1; b <= 13; ++b) CHECK(lat.bonds[b].coupling == 0.05);
  CHECK(lat.bonds[14].coupling == s.lambda_C);
  for (int b = 15; b <= 29; ++b) CHECK(lat.bonds[b].coupling == 0.025);
  for (int j = 1; j <= 14; ++j) {
    CHECK(lat.sites[j].jc.omega == 1.0);
    CHECK(lat.sites[j].jc.omega0 == 1.0);
  }
  for (int j = 15; j <= 30; ++j) {
    CHECK(lat.sites[j].jc.omega == 40.0);
    CHECK(lat.sites[j].jc.omega0 == 0.8);
    CHECK(lat.sites[j].jc.g == 0.2);
  }
}

TEST_CASE("centred split-pulse preset") {
  const ScenarioSpec s = scenario_preset("fig7");
  CHECK(s.num_sites == 31);
  CHECK(s.n_max == 2);
  CHECK(!s.has_qubit);
  CHECK(s.two_section);
  CHECK(s.section_boundary == 16);
  CHECK(s.left.omega == 1.0);
  CHECK(s.left.omega0 == 1.0);
  CHECK(s.left.g == 0.04);
  CHECK(s.left.v == 0.01);
  CHECK(s.lambda_C == doctest::Approx(-0.01 * kSqrtHalf).epsilon(1e-15));
  CHECK(s.right.omega == 48.0);
  CHECK(s.right.omega0 == 0.96);
  CHECK(s.right.g == 0.04);
  CHECK(s.right.v == 0.005);
  CHECK(s.initial == InitialStateKind::centered_polariton);
  CHECK(s.tau == 0.2);
  CHECK(s.t_final == 15000.0);
  CHECK(s.measure_stride == 50);
  CHECK(s.time_unit == 0.01);

  const LatticeSpec lat = build_lattice(s);
  REQUIRE(lat.num_bonds() == 30);
  for (int b = 0; b <= 14; ++b) CHECK(lat.bonds[b].coupling == 0.01);
  CHECK(lat.bonds[15].coupling == s.lambda_C);
  for (int b = 16; b <= 29; ++b) CHECK(lat.bonds[b].coupling == 0.005);
  for (int j = 0; j <= 15; ++j) CHECK(lat.sites[j].jc.omega == 1.0);
  for (int j = 16; j <= 30; ++j) CHECK(lat.sites[j].jc.omega == 48.0);
}

TEST_CASE("record validation rejects inconsistent setups") {
  ScenarioSpec s = scenario_preset("fig2");
  CHECK_NOTHROW(s.validate());

  s.num_sites = 1;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  s = scenario_preset("fig2");
  s.n_max = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  s = scenario_preset("fig2");
  s.section_boundary = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.section_boundary = 27;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  // Two-section records need the boundary strictly inside the chain.
  s = scenario_preset("fig6");
  s.section_boundary = 31;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  // A qubit needs at least one unit in its own section.
  s = scenario_preset("fig6");
  s.section_boundary = 1;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  // Initial-state / qubit consistency both ways.
  s = scenario_preset("fig2");
  s.initial = InitialStateKind::centered_polariton;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = scenario_preset("fig7");
  s.initial = InitialStateKind::activation_excited;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("exported time axis is measured in hopping periods") {
  CHECK(scenario_preset("fig2").t_final * scenario_preset("fig2").time_unit == 100.0);
  CHECK(scenario_preset("fig3").t_final * scenario_preset("fig3").time_unit == 1200.0);
  CHECK(scenario_preset("fig4").t_final * scenario_preset("fig4").time_unit == 100.0);
  CHECK(scenario_preset("fig6").t_final * scenario_preset("fig6").time_unit == 42.5);
  CHECK(scenario_preset("fig7").t_final * scenario_preset("fig7").time_unit == 150.0);
}
