#pragma once

// Lattice geometry and operator content of the hybrid chain
//
//   H = ω_A σ+σ−|_1 + λ (σ+_1 σ−_2 + h.c.)
//     + Σ_j [ ω a†a + ω0 σ+σ− + g (σ+ a + σ− a†) ]_j
//     + Σ_j v_j (σ+_j σ−_{j+1} + h.c.)
//
// Site 0 may be a bare activation qubit (local dimension 2); all other sites
// are resonator+TLS units with a Fock cutoff n_max (local dimension
// 2(n_max+1)).  The local basis of a unit is TLS-major:
//   {|dn,0>, ..., |dn,n_max>, |up,0>, ..., |up,n_max>}.
// Sites and bonds are 0-based in code; user-facing output is 1-based.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hqlat/jc.hpp"

namespace hqlat {

struct SiteSpec {
  enum class Kind { activation_qubit, jc_unit };

  Kind kind = Kind::jc_unit;
  double omega_A = 0.0;  // activation qubit only
  JCParams jc;           // jc unit only
  int n_max = 0;         // resonator Fock cutoff, jc unit only

  static SiteSpec activation(double omega_A);
  static SiteSpec jc_unit(const JCParams& params, int n_max);

  bool is_jc() const { return kind == Kind::jc_unit; }
  int dim() const { return is_jc() ? 2 * (n_max + 1) : 2; }
};

// Bond between sites (left, left+1); `coupling` multiplies the TLS-TLS
// exchange σ+σ− + σ−σ+ across the bond.
struct BondSpec {
  int left = 0;
  double coupling = 0.0;
};

struct LatticeSpec {
  std::vector<SiteSpec> sites;
  std::vector<BondSpec> bonds;
  std::string label;

  int num_sites() const { return static_cast<int>(sites.size()); }
  int num_bonds() const { return static_cast<int>(bonds.size()); }
  bool has_activation_qubit() const;
  int first_jc_site() const;  // 0, or 1 when an activation qubit is present
  double total_dim() const;   // product of local dimensions (may overflow int)

  // Structural invariants: bond count = site count − 1, bonds ordered and
  // covering (j, j+1), at most one activation qubit and only at site 0,
  // n_max >= 1 on every unit.  Throws std::invalid_argument.
  void validate() const;
};

// Named single-site operators.  Photon and branch operators exist only on
// jc units; requesting one on the activation qubit throws.
enum class LocalOp {
  tls_raise,
  tls_lower,
  tls_number,
  photon_annihilate,
  photon_number,
  polariton_number,          // σ+σ− + a†a
  lower_branch_projector,    // |1,−><1,−|
  upper_branch_projector,    // |1,+><1,+|
};

Eigen::MatrixXcd local_operator(const SiteSpec& site, LocalOp op);

// Human-readable labels of the local basis in storage order, e.g.
// {"dn,0", "dn,1", ..., "up,n_max"} or {"dn", "up"}.
std::vector<std::string> local_basis_labels(const SiteSpec& site);

// Single-site Hamiltonian: ω_A σ+σ− for the qubit, the resonator+TLS unit
// Hamiltonian otherwise.
Eigen::MatrixXcd onsite_hamiltonian(const SiteSpec& site);

// Two-site bond Hamiltonians
//   H_b = coupling_b (σ+⊗σ− + σ−⊗σ+) + w_L h_left⊗1 + w_R 1⊗h_right
// with on-site weights 1/2 for interior sites and 1 at the chain ends, so
// that Σ_b H_b reproduces the full Hamiltonian exactly.
std::vector<Eigen::MatrixXcd> bond_hamiltonians(const LatticeSpec& lattice);

// The two mutually commuting gate layers of the even/odd splitting.
// first_layer holds bonds starting at sites 1,3,5,... in 1-based labels
// (even 0-based bond indices); second_layer holds the rest.
struct BondPartition {
  std::vector<int> first_layer;
  std::vector<int> second_layer;
};
BondPartition even_odd_split(const LatticeSpec& lattice);

enum class InitialStateKind {
  activation_excited,  // |up>_1 ⊗ |dn,0>_2 ... |dn,0>_L
  centered_polariton,  // |0,−> everywhere except |1,−> at the middle site
};

// Normalized local vectors of the requested product state.
std::vector<Eigen::VectorXcd> initial_state(const LatticeSpec& lattice,
                                            InitialStateKind kind);

}  // namespace hqlat
