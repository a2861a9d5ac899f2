#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hqlat/jc.hpp"

using namespace hqlat;

namespace {

// Strongly red-detuned reference unit (Δ = −9) used for the frozen values.
const JCParams kDetuned(10.0, 1.0, 0.8);
const JCParams kResonant(1.0, 1.0, 0.04);

constexpr double kSqrtHalf = 0.70710678118654752440;

}  // namespace

TEST_CASE("mixing angle: resonant limit and principal branch") {
  CHECK(mixing_angle(kResonant, 1) == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  CHECK(mixing_angle(kResonant, 2) == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  // Frozen reference: atan(2·0.8/(−9)), recomputed independently.
  CHECK(mixing_angle(kDetuned, 1) ==
        doctest::Approx(-0.17593962545252784).epsilon(1e-14));
  // Positive detuning mirrors the sign.
  const JCParams blue(1.0, 10.0, 0.8);
  CHECK(mixing_angle(blue, 1) == doctest::Approx(0.17593962545252784).epsilon(1e-14));
  CHECK_THROWS_AS(mixing_angle(kResonant, 0), std::invalid_argument);
}

TEST_CASE("polariton coefficients: normalization, branch relations, orthogonality") {
  for (const JCParams& p : {kDetuned, kResonant, JCParams(1.0, 3.0, 0.2)}) {
    for (int n = 1; n <= 3; ++n) {
      const PolaritonCoeffs c = polariton_coefficients(p, n);
      CHECK(c.rho_plus * c.rho_plus + c.gamma_plus * c.gamma_plus ==
            doctest::Approx(1.0).epsilon(1e-12));
      CHECK(c.rho_minus * c.rho_minus + c.gamma_minus * c.gamma_minus ==
            doctest::Approx(1.0).epsilon(1e-12));
      CHECK(c.rho_minus == -c.gamma_plus);
      CHECK(c.gamma_minus == c.rho_plus);
      // (γ₊, ρ₊) ⊥ (γ₋, ρ₋)
      CHECK(c.gamma_plus * c.gamma_minus + c.rho_plus * c.rho_minus ==
            doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("polariton coefficients: ground manifold boundary values") {
  const PolaritonCoeffs c = polariton_coefficients(kDetuned, 0);
  CHECK(c.gamma_minus == 1.0);
  CHECK(c.gamma_plus == 0.0);
  CHECK(c.rho_minus == 0.0);
  CHECK(c.rho_plus == 0.0);
}

TEST_CASE("polariton coefficients: frozen dispersive amplitude") {
  const PolaritonCoeffs c = polariton_coefficients(kDetuned, 1);
  // sin(θ₁/2) with θ₁ = atan(1.6/(−9)); the small TLS weight of the
  // photon-like lower branch.
  CHECK(c.rho_minus == doctest::Approx(0.08785639479882307).epsilon(1e-14));
  CHECK(c.rho_minus > 0.0);  // −sin of a negative half angle
}

TEST_CASE("polariton coefficients: resonant amplitudes are ±1/√2") {
  const PolaritonCoeffs c = polariton_coefficients(kResonant, 1);
  CHECK(c.rho_plus == doctest::Approx(kSqrtHalf).epsilon(1e-15));
  CHECK(c.gamma_plus == doctest::Approx(kSqrtHalf).epsilon(1e-15));
  CHECK(c.rho_minus == doctest::Approx(-kSqrtHalf).epsilon(1e-15));
}

TEST_CASE("branch energy: resonant doublet ω ± g√n") {
  for (int n = 1; n <= 2; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    CHECK(branch_energy(kResonant, n, Branch::lower).value ==
          doctest::Approx(n * 1.0 - 0.04 * root).epsilon(1e-12));
    CHECK(branch_energy(kResonant, n, Branch::upper).value ==
          doctest::Approx(n * 1.0 + 0.04 * root).epsilon(1e-12));
  }
  CHECK(branch_energy(kResonant, 0, Branch::lower).value == 0.0);
  CHECK_THROWS_AS(branch_energy(kResonant, 0, Branch::upper), std::invalid_argument);
}

TEST_CASE("branch energy: literal formula puts the '−' branch on top for Δ < 0") {
  const double lower = branch_energy(kDetuned, 1, Branch::lower).value;
  const double upper = branch_energy(kDetuned, 1, Branch::upper).value;
  // E₁± = ω + Δ/2 ± (Δ/2)√(1 + 4g²/Δ²), evaluated literally: the negative
  // prefactor flips which branch is the higher eigenvalue.
  CHECK(lower == doctest::Approx(10.070557952810574).epsilon(1e-14));
  CHECK(lower > upper);
  CHECK(lower + upper == doctest::Approx(2.0 * 10.0 + (-9.0)).epsilon(1e-12));  // trace
}

TEST_CASE("branch energy: eigenvector consistency fixes the sign convention") {
  // (γ_n±, ρ_n±) must be an eigenvector of the n-manifold block
  // [[nω, g√n], [g√n, (n−1)ω + ω0]] with eigenvalue E_n±.
  for (const JCParams& p : {kDetuned, kResonant, JCParams(1.0, 4.0, 0.3)}) {
    for (int n = 1; n <= 3; ++n) {
      const double root = std::sqrt(static_cast<double>(n));
      const double h00 = n * p.omega;
      const double h01 = p.g * root;
      const double h11 = (n - 1) * p.omega + p.omega0;
      const PolaritonCoeffs c = polariton_coefficients(p, n);
      for (Branch b : {Branch::lower, Branch::upper}) {
        const double e = branch_energy(p, n, b).value;
        const double g0 = c.gamma(b), r0 = c.rho(b);
        CHECK(h00 * g0 + h01 * r0 == doctest::Approx(e * g0).epsilon(1e-10));
        CHECK(h01 * g0 + h11 * r0 == doctest::Approx(e * r0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("branch energy: lower branch continuous at Δ → 0⁺") {
  const JCParams nearly(1.0, 1.0 + 1e-9, 0.04);
  CHECK(branch_energy(nearly, 1, Branch::lower).value ==
        doctest::Approx(1.0 - 0.04).epsilon(1e-8));
  CHECK(branch_energy(nearly, 2, Branch::lower).value ==
        doctest::Approx(2.0 - 0.04 * std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("hopping element reduces to the dressed amplitude product") {
  const double t = hopping_element(kDetuned, 1, Branch::lower, Branch::lower);
  const PolaritonCoeffs c1 = polariton_coefficients(kDetuned, 1);
  const PolaritonCoeffs c0 = polariton_coefficients(kDetuned, 0);
  CHECK(t == doctest::Approx(c1.rho_minus * c0.gamma_minus).epsilon(1e-14));
}

TEST_CASE("effective hopping: ṽ = v ρ₁₋²") {
  // Frozen dispersive value (v = 0.5 with the Δ = −9 unit).
  CHECK(effective_hopping(0.5, kDetuned) ==
        doctest::Approx(0.0038593730535233326).epsilon(1e-14));
  // Resonant halving.
  CHECK(effective_hopping(0.01, kResonant) == doctest::Approx(0.005).epsilon(1e-14));
}

TEST_CASE("matching conditions: resonant lower-branch launch") {
  const MatchingConditions m = matching_conditions(kResonant, 0.01, Regime::resonant_polariton);
  CHECK(m.omega_A == doctest::Approx(0.96).epsilon(1e-12));
  CHECK(m.lambda == doctest::Approx(-0.01 * kSqrtHalf).epsilon(1e-12));
  CHECK(m.suppression_ratio == doctest::Approx(16.0).epsilon(1e-12));
  // The qubit frequency equals the lower-branch energy it must address.
  CHECK(m.omega_A ==
        doctest::Approx(branch_energy(kResonant, 1, Branch::lower).value).epsilon(1e-12));
}

TEST_CASE("matching conditions: dispersive photon launch (frozen values)") {
  const MatchingConditions m = matching_conditions(kDetuned, 0.5, Regime::dispersive_photon);
  CHECK(m.omega_A == doctest::Approx(10.071111111111112).epsilon(1e-14));
  CHECK(m.lambda == doctest::Approx(0.043928197399411534).epsilon(1e-14));
}

TEST_CASE("matching conditions: spin-wave launch couples undressed") {
  const JCParams blue(1.0, 10.0, 0.05);
  const MatchingConditions m = matching_conditions(blue, 0.02, Regime::dispersive_spinwave);
  CHECK(m.omega_A == 10.0);
  CHECK(m.lambda == 0.02);
}

TEST_CASE("matching conditions: dispersive regimes require a detuning") {
  CHECK_THROWS_AS(matching_conditions(kResonant, 0.01, Regime::dispersive_photon),
                  std::invalid_argument);
  CHECK_THROWS_AS(matching_conditions(kResonant, 0.01, Regime::dispersive_spinwave),
                  std::invalid_argument);
}

TEST_CASE("impedance identity: λ = ṽ / ρ₁₋ for the resonant launch") {
  for (double v : {0.01, 0.05, 0.5, -0.2}) {
    const MatchingConditions m = matching_conditions(kResonant, v, Regime::resonant_polariton);
    const double rho = polariton_coefficients(kResonant, 1).rho_minus;
    CHECK(m.lambda == doctest::Approx(effective_hopping(v, kResonant) / rho).epsilon(1e-12));
  }
}

TEST_CASE("swap interface: resonant handoff gives v_r = v_l/2 exactly") {
  const SwapInterface s = swap_interface(JCParams(1.0, 1.0, 0.2), 0.05);
  CHECK(s.lambda_C == doctest::Approx(-0.05 * kSqrtHalf).epsilon(1e-14));
  CHECK(s.v_right == 0.025);  // exact: ρ₁₋² = 1/2 algebraically on resonance
  CHECK(s.lambda_eff == s.v_right);
}

TEST_CASE("swap interface: chain identity v_r = v_l ρ₁₋² off resonance") {
  for (const JCParams& p : {kDetuned, JCParams(1.0, 2.5, 0.3)}) {
    for (double v : {0.05, 0.7}) {
      const SwapInterface s = swap_interface(p, v);
      const double rho = polariton_coefficients(p, 1).rho_minus;
      CHECK(s.v_right == doctest::Approx(v * rho * rho).epsilon(1e-13));
      CHECK(s.lambda_C == doctest::Approx(v * rho).epsilon(1e-13));
      CHECK(s.lambda_eff == doctest::Approx(rho * s.lambda_C).epsilon(1e-13));
    }
  }
}

TEST_CASE("parameter validation rejects a negative coupling") {
  CHECK_THROWS_AS(JCParams(1.0, 1.0, -0.1), std::invalid_argument);
}
