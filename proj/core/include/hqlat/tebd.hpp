#pragma once

// Time-evolving block decimation driver.
//
// The Hamiltonian is split into the two commuting bond layers F (bonds
// starting at odd 1-based sites) and G (the rest).  One step of the
// second-order product formula applies F for τ/2, G for τ, F for τ/2.
// Between measurements adjacent half-layers of consecutive steps are fused
// (… F τ/2 | F τ/2 … → … F τ …), which leaves the sampled states unchanged.
// Bond gates exp(−i dt H_b) come from Hermitian eigendecompositions and are
// cached per (bond, dt).

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <vector>

#include "hqlat/lattice.hpp"
#include "hqlat/mps.hpp"

namespace hqlat {

// Product-formula coefficient table: step = Π_l e^{−i c_l τ F} e^{−i d_l τ G}.
struct TrotterCoefficients {
  std::vector<double> c;
  std::vector<double> d;

  // c = {1/2, 1/2}, d = {1, 0}: the symmetric second-order scheme.
  static TrotterCoefficients second_order();
  void validate() const;  // Σc = Σd = 1, equal lengths
};

// One layer application: which of the two bond layers, for fraction·τ.
struct LayerStep {
  bool first_layer = true;
  double fraction = 0.0;
};

struct TrotterPlan {
  TrotterCoefficients coeffs;
  BondPartition layers;
  double tau = 0.0;
  std::vector<LayerStep> substeps;  // one step, zero-fraction entries dropped

  // `nsteps` consecutive steps with adjacent same-layer substeps merged.
  std::vector<LayerStep> fused_block(long long nsteps) const;
};

TrotterPlan build_plan(const LatticeSpec& lattice, double tau,
                       const TrotterCoefficients& coeffs =
                           TrotterCoefficients::second_order());

// exp(−i dt h) for Hermitian h (checked to 1e-10) via eigendecomposition.
Eigen::MatrixXcd exponentiate_bond(const Eigen::MatrixXcd& h, double dt);

struct ObservableSet {
  bool tls = true;
  bool photon = true;
  bool polariton = true;
  bool branches = false;  // n = 1 branch populations (jc units only)
};

struct SimulationConfig {
  double tau = 0.0;
  double t_final = 0.0;
  long long measure_stride = 1;
  TruncationPolicy policy;
  ObservableSet observables;
  bool keep_truncation_records = false;

  // Energy subtracted per excitation from the evolution generator
  // (H → H − E₀ N̂).  Every tracked observable commutes with N̂, so sampled
  // values are unchanged; what drops out is the fast uniform phase rotation,
  // and with it the dominant contribution to the splitting error.  Unset
  // picks the TLS frequency of the first jc unit; 0 evolves in the lab
  // frame.  Reported energies always refer to the unshifted Hamiltonian.
  std::optional<double> frame_shift;

  void validate() const;
};

// Default evolution-frame offset: the TLS frequency of the first jc unit.
double suggested_frame_shift(const LatticeSpec& lattice);

// Sampled time series.  Per-site families cover the jc units in `jc_sites`
// order; the activation qubit (when present) is reported separately.
struct ObservableSeries {
  std::vector<double> times;  // absolute (ħ = 1) times
  std::vector<int> jc_sites;  // 0-based site indices of the per-site columns
  bool has_activation = false;

  std::vector<double> activation_excitation;
  std::vector<std::vector<double>> tls_excitation;
  std::vector<std::vector<double>> photon_number;
  std::vector<std::vector<double>> polariton_number;
  std::vector<std::vector<double>> branch_lower;  // when observables.branches
  std::vector<std::vector<double>> branch_upper;

  std::vector<double> norm;              // contracted <ψ|ψ>^(1/2)
  std::vector<double> energy;            // Σ_b <H_b>
  std::vector<double> total_excitation;  // qubit + Σ_j (σ+σ− + a†a)
  std::vector<double> eps_trunc;         // cumulative 1 − Π(1 − 2ε_n)

  std::size_t num_samples() const { return times.size(); }
};

struct RunResult {
  ObservableSeries series;
  TruncationLedger ledger{false};
  long long steps = 0;
  int max_bond_dim = 0;
};

// Evolves the requested product state from t = 0 to t_final, sampling every
// measure_stride steps and at the final time.
RunResult run(const LatticeSpec& lattice, InitialStateKind initial,
              const SimulationConfig& config);

}  // namespace hqlat
