#pragma once

// Closed-form single-unit algebra for a resonator strongly coupled to a
// two-level system (ħ = 1 throughout):
//
//   H_unit = ω a†a + ω0 σ+σ− + g (σ+ a + σ− a†)
//
// The n-excitation manifold is spanned by {|dn,n>, |up,n−1>} and mixes into
// the dressed pair |n,±> = γ_n± |dn,n> + ρ_n± |up,n−1> with mixing angle
// tan(θ_n) = 2 g √n / Δ, Δ = ω0 − ω.  Everything here is analytic; the
// time-evolution engines use these routines both to prepare states and to
// cross-check numerics.

namespace hqlat {

// Parameters of one resonator+TLS unit.
struct JCParams {
  double omega = 0.0;   // resonator frequency
  double omega0 = 0.0;  // TLS transition frequency
  double g = 0.0;       // light-matter coupling (g >= 0)

  JCParams() = default;
  JCParams(double omega_, double omega0_, double g_);

  double detuning() const { return omega0 - omega; }  // Δ = ω0 − ω
  bool resonant() const { return detuning() == 0.0; }
};

enum class Branch { lower, upper };

// Dressed-state amplitudes of the n-excitation doublet.  Conventions:
//   ρ_n+ = cos(θ_n/2),  γ_n+ = sin(θ_n/2),  ρ_n− = −γ_n+,  γ_n− = ρ_n+,
// and for the ground manifold (n = 0): γ_0− = 1, all others 0.
struct PolaritonCoeffs {
  int n = 0;
  double theta = 0.0;  // mixing angle, π/2 on resonance
  double rho_plus = 0.0;
  double gamma_plus = 0.0;
  double rho_minus = 0.0;
  double gamma_minus = 0.0;

  double rho(Branch b) const { return b == Branch::upper ? rho_plus : rho_minus; }
  double gamma(Branch b) const { return b == Branch::upper ? gamma_plus : gamma_minus; }
};

struct BranchEnergy {
  int n = 0;
  Branch branch = Branch::lower;
  double value = 0.0;  // energy of |n,branch> (vacuum at 0)
};

// Carrier-selection regimes for the activation qubit.
enum class Regime { resonant_polariton, dispersive_photon, dispersive_spinwave };

// Activation-qubit frequency/coupling targets for a given carrier regime,
// plus the branch-suppression ratio g / (|v|/4).
struct MatchingConditions {
  Regime regime = Regime::resonant_polariton;
  double omega_A = 0.0;
  double lambda = 0.0;
  double suppression_ratio = 0.0;
};

// Interface parameters connecting a lower-branch polariton section (left)
// to a bare-TLS section (right) without impedance mismatch:
//   λ_C = v_left ρ_1−,   λ_eff = ρ_1− λ_C,   v_right = λ_eff.
struct SwapInterface {
  double lambda_C = 0.0;
  double lambda_eff = 0.0;
  double v_right = 0.0;
};

// Mixing angle θ_n.  Returns π/2 for Δ = 0, otherwise atan(2g√n/Δ) in
// (−π/2, π/2).  Throws std::invalid_argument for n < 1.
double mixing_angle(const JCParams& p, int n);

// Dressed amplitudes for manifold n >= 0 (n = 0 returns the boundary values).
PolaritonCoeffs polariton_coefficients(const JCParams& p, int n);

// Energy of |n,±>:  E_n± = nω + Δ/2 ± (Δ/2)√(1 + 4ng²/Δ²), evaluated
// literally (for Δ < 0 the "−" branch is therefore the higher eigenvalue);
// the Δ = 0 limit is nω ± g√n.  n = 0: lower branch has energy 0, the upper
// branch does not exist and is rejected.
BranchEnergy branch_energy(const JCParams& p, int n, Branch branch);

// Hopping matrix element t_n^{αβ} = ρ_nα γ_{n−1,β} between dressed states of
// adjacent units (n >= 1).
double hopping_element(const JCParams& p, int n, Branch alpha, Branch beta);

// Effective nearest-neighbour hopping of the lower single-excitation branch:
// ṽ = v ρ_1−².
double effective_hopping(double v, const JCParams& p);

// Matching conditions for launching the requested carrier from the
// activation qubit.  Dispersive regimes require Δ != 0.
MatchingConditions matching_conditions(const JCParams& p, double v, Regime regime);

// Interface parameters for handing a lower-branch polariton from a section
// with TLS coupling v_left into a bare spin-wave section.
SwapInterface swap_interface(const JCParams& left, double v_left);

const char* regime_name(Regime regime);

}  // namespace hqlat
