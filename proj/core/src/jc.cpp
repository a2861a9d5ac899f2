#include "hqlat/jc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hqlat {

JCParams::JCParams(double omega_, double omega0_, double g_)
    : omega(omega_), omega0(omega0_), g(g_) {
  if (!(g >= 0.0)) {
    throw std::invalid_argument("JCParams: coupling g must be >= 0, got " +
                                std::to_string(g_));
  }
  if (!std::isfinite(omega) || !std::isfinite(omega0) || !std::isfinite(g)) {
    throw std::invalid_argument("JCParams: parameters must be finite");
  }
}

double mixing_angle(const JCParams& p, int n) {
  if (n < 1) {
    throw std::invalid_argument("mixing_angle: manifold index n must be >= 1");
  }
  const double delta = p.detuning();
  if (delta == 0.0) {
    return M_PI / 2.0;  // resonant limit, independent of g and n
  }
  return std::atan(2.0 * p.g * std::sqrt(static_cast<double>(n)) / delta);
}

PolaritonCoeffs polariton_coefficients(const JCParams& p, int n) {
  if (n < 0) {
    throw std::invalid_argument("polariton_coefficients: n must be >= 0");
  }
  PolaritonCoeffs c;
  c.n = n;
  if (n == 0) {
    // Ground manifold: only |0,−> = |dn,0> exists.
    c.theta = 0.0;
    c.gamma_minus = 1.0;
    c.gamma_plus = 0.0;
    c.rho_minus = 0.0;
    c.rho_plus = 0.0;
    return c;
  }
  c.theta = mixing_angle(p, n);
  c.rho_plus = std::cos(c.theta / 2.0);
  c.gamma_plus = std::sin(c.theta / 2.0);
  c.rho_minus = -c.gamma_plus;
  c.gamma_minus = c.rho_plus;
  return c;
}

BranchEnergy branch_energy(const JCParams& p, int n, Branch branch) {
  if (n < 0) {
    throw std::invalid_argument("branch_energy: n must be >= 0");
  }
  if (n == 0) {
    if (branch == Branch::upper) {
      throw std::invalid_argument(
          "branch_energy: the n = 0 manifold has no upper branch");
    }
    return {0, Branch::lower, 0.0};
  }
  const double delta = p.detuning();
  const double sign = (branch == Branch::upper) ? +1.0 : -1.0;
  double value = 0.0;
  if (delta == 0.0) {
    value = n * p.omega + sign * p.g * std::sqrt(static_cast<double>(n));
  } else {
    const double x = 2.0 * p.g * std::sqrt(static_cast<double>(n)) / delta;
    value = n * p.omega + 0.5 * delta * (1.0 + sign * std::sqrt(1.0 + x * x));
  }
  return {n, branch, value};
}

double hopping_element(const JCParams& p, int n, Branch alpha, Branch beta) {
  if (n < 1) {
    throw std::invalid_argument("hopping_element: n must be >= 1");
  }
  const PolaritonCoeffs upper_manifold = polariton_coefficients(p, n);
  const PolaritonCoeffs lower_manifold = polariton_coefficients(p, n - 1);
  return upper_manifold.rho(alpha) * lower_manifold.gamma(beta);
}

double effective_hopping(double v, const JCParams& p) {
  const double rho = polariton_coefficients(p, 1).rho_minus;
  return v * rho * rho;
}

MatchingConditions matching_conditions(const JCParams& p, double v, Regime regime) {
  const double delta = p.detuning();
  if (regime != Regime::resonant_polariton && delta == 0.0) {
    throw std::invalid_argument(
        "matching_conditions: dispersive regimes require a nonzero detuning");
  }
  MatchingConditions m;
  m.regime = regime;
  m.suppression_ratio = p.g / (std::abs(v) / 4.0);
  const double rho1m = polariton_coefficients(p, 1).rho_minus;
  switch (regime) {
    case Regime::resonant_polariton:
      // Lower-branch polariton launch: qubit sits at the band centre ω − g
      // and couples with the dressed amplitude v ρ_1− (= −v/√2 on resonance).
      m.omega_A = p.omega - p.g;
      m.lambda = v * rho1m;
      break;
    case Regime::dispersive_photon:
      // Photon-like carrier: band centre at the dispersively shifted ω − g²/Δ.
      m.omega_A = p.omega - p.g * p.g / delta;
      m.lambda = v * rho1m;
      break;
    case Regime::dispersive_spinwave:
      // Bare-TLS carrier: direct exchange, no dressing.
      m.omega_A = p.omega0;
      m.lambda = v;
      break;
  }
  return m;
}

SwapInterface swap_interface(const JCParams& left, double v_left) {
  const double rho1m = polariton_coefficients(left, 1).rho_minus;
  // ρ₁₋² via the half-angle identity (1 − cos θ)/2 with cos θ taken from the
  // algebraic ratio |Δ|/√(Δ² + 4g²): exactly 1/2 on resonance, where the
  // sin²(π/4) route is an ulp off and would render v_right = v_left/2 as
  // 0.02499... instead of 0.025.
  const double delta = left.detuning();
  const double cos_theta =
      delta == 0.0 ? 0.0 : std::abs(delta) / std::hypot(delta, 2.0 * left.g);
  SwapInterface s;
  s.lambda_C = v_left * rho1m;
  s.lambda_eff = v_left * (0.5 * (1.0 - cos_theta));
  s.v_right = s.lambda_eff;  // impedance match: right coupling equals λ_eff
  return s;
}

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::resonant_polariton:
      return "resonant-polariton";
    case Regime::dispersive_photon:
      return "dispersive-photon";
    case Regime::dispersive_spinwave:
      return "dispersive-spinwave";
  }
  return "unknown";
}

}  // namespace hqlat
