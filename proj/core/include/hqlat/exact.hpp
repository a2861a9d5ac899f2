#pragma once

// Dense exact-diagonalization reference for small lattices, used as ground
// truth for the tensor-network evolution.  Two independent routes exist:
//  * the full product-space Hamiltonian (site 0 on the most significant
//    index), feasible up to a configurable dimension cap;
//  * the closed single-excitation sector (total excitation number commutes
//    with H), which stays tractable for longer chains and is cross-checked
//    against the full route on small lattices.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hqlat/lattice.hpp"
#include "hqlat/tebd.hpp"

namespace hqlat {

inline constexpr double kDefaultDenseDimCap = 20000;

// Full-space Hamiltonian assembled directly from the on-site and exchange
// terms (independent of the bond-split used by the evolution engine).
// Throws ResourceLimitError when the dimension exceeds `dim_cap`.
Eigen::MatrixXcd build_dense_hamiltonian(const LatticeSpec& lattice,
                                         double dim_cap = kDefaultDenseDimCap);

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

SpectralDecomposition diagonalize(const Eigen::MatrixXcd& hermitian);

// ψ(t) = V exp(−i E t) V† ψ0.
Eigen::VectorXcd evolve_exact(const Eigen::VectorXcd& psi0, double t,
                              const SpectralDecomposition& spectral);

// Dense vector of a product state (same index convention as the MPS).
Eigen::VectorXcd dense_product_state(const LatticeSpec& lattice,
                                     const std::vector<Eigen::VectorXcd>& locals);

// Operator embeddings for cross-checks (identity elsewhere).
Eigen::MatrixXcd embed_one_site(const LatticeSpec& lattice, int site,
                                const Eigen::MatrixXcd& op);
Eigen::MatrixXcd embed_two_site(const LatticeSpec& lattice, int bond,
                                const Eigen::MatrixXcd& op);

// <ψ| op_site |ψ> by partial contraction (no embedding).
std::complex<double> local_expectation(const Eigen::VectorXcd& psi,
                                       const LatticeSpec& lattice, int site,
                                       const Eigen::MatrixXcd& op);

// Populations of the n = 1 dressed doublet at a jc site: (lower, upper).
std::pair<double, double> branch_populations(const Eigen::VectorXcd& psi,
                                             const LatticeSpec& lattice, int site);

// ---- single-excitation sector ------------------------------------------------

// Basis: [qubit-up], then per jc unit its |up,0> ("spin") and |dn,1>
// ("photon") components, sites ascending.  Valid because every Hamiltonian
// term conserves the total excitation number.
class SingleExcitationModel {
 public:
  explicit SingleExcitationModel(const LatticeSpec& lattice);

  int dim() const { return static_cast<int>(h_.rows()); }
  bool has_qubit() const { return has_qubit_; }
  const Eigen::MatrixXcd& hamiltonian() const { return h_; }
  const SpectralDecomposition& spectral() const { return spectral_; }

  int qubit_index() const;
  int spin_index(int site) const;    // |up,0> component of a jc site
  int photon_index(int site) const;  // |dn,1> component of a jc site

  Eigen::VectorXcd initial_amplitudes(InitialStateKind kind) const;
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& amps0, double t) const;

  // Local observables from sector amplitudes.
  double tls_excitation(const Eigen::VectorXcd& amps, int site) const;
  double photon_number(const Eigen::VectorXcd& amps, int site) const;
  std::pair<double, double> branch_populations(const Eigen::VectorXcd& amps,
                                               int site) const;

 private:
  LatticeSpec lattice_;
  bool has_qubit_ = false;
  Eigen::MatrixXcd h_;
  SpectralDecomposition spectral_;
};

// ---- TEBD cross-check ---------------------------------------------------------

struct DeviationReport {
  struct Entry {
    std::string family;
    double max_abs_dev = 0.0;
    double at_time = 0.0;
  };
  std::vector<Entry> entries;
  double overall = 0.0;
  double overall_time = 0.0;
};

// Runs the tensor-network evolution and the full-space dense reference on the
// same lattice/initial state and reports per-family maximum deviations over
// all sampled times and sites.
DeviationReport compare_with_tebd(const LatticeSpec& lattice, InitialStateKind initial,
                                  const SimulationConfig& config,
                                  double dim_cap = kDefaultDenseDimCap);

}  // namespace hqlat
