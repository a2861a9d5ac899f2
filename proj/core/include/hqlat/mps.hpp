#pragma once

// Matrix product state in canonical (Γ,λ) form with adaptive bond dimension.
//
// State layout for L sites:  ψ = Γ_1 λ_1 Γ_2 λ_2 ... λ_{L−1} Γ_L, with unit
// boundary weights.  Γ_j is stored as one (χ_left × χ_right) matrix per
// physical index; λ_b are the Schmidt coefficients across bond b and satisfy
// Σ λ² = 1 after every update.  Two-site gates are absorbed by SVD of the
// weighted two-site tensor; Schmidt coefficients <= ε0 are discarded first,
// then the bond dimension is capped at χ_max.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "hqlat/errors.hpp"

namespace hqlat {

struct TruncationPolicy {
  int chi_max = 4;         // hard cap on the bond dimension
  double epsilon0 = 1e-6;  // Schmidt-coefficient discard threshold
};

struct TruncationRecord {
  long long step = -1;
  int bond = -1;
  double eps = 0.0;  // per-truncation weight loss 1 − (norm_new/norm_old)²
  int kept = 0;
};

// Running account of truncation events.  The cumulative error estimate is
// ε_total = 1 − Π_n (1 − 2 ε_n); Σ ε_n is kept as a secondary diagnostic.
// Individual records are stored only when requested (long runs produce
// millions of events).
class TruncationLedger {
 public:
  explicit TruncationLedger(bool keep_records = false)
      : keep_records_(keep_records) {}

  void append(long long step, int bond, double eps, int kept);
  double total_error() const { return static_cast<double>(1.0L - product_); }
  double sum_eps() const { return static_cast<double>(sum_); }
  std::size_t count() const { return count_; }
  const std::vector<TruncationRecord>& records() const { return records_; }

 private:
  bool keep_records_;
  long double product_ = 1.0L;  // Π (1 − 2 ε_n)
  long double sum_ = 0.0L;      // Σ ε_n
  std::size_t count_ = 0;
  std::vector<TruncationRecord> records_;
};

// Result of one SVD + truncation of a matricised two-site tensor
// Θ[(a s1), (s2 c)]:  Θ ≈ U diag(norm_new · weights) Vh with the kept
// `weights` renormalised to Σ w² = 1.
struct SplitResult {
  Eigen::MatrixXcd u;        // (χL d1) × kept, isometric columns
  Eigen::VectorXd weights;   // kept Schmidt coefficients, renormalised
  Eigen::MatrixXcd vh;       // kept × (d2 χR), isometric rows
  double eps = 0.0;          // 1 − (norm_new / norm_old)²
  int kept = 0;
  double norm_old = 0.0;
  double norm_new = 0.0;
};

// Threshold-then-cap truncation: discard singular values <= ε0, then keep at
// most χ_max.  Throws DegenerateStateError when nothing survives the
// threshold.
SplitResult split_and_truncate(const Eigen::MatrixXcd& theta,
                               const TruncationPolicy& policy);

struct GateResult {
  double eps = 0.0;
  int kept = 0;
};

class MatrixProductState {
 public:
  // Product state from normalised local vectors (norm checked to 1e-10).
  static MatrixProductState from_product_state(
      const std::vector<Eigen::VectorXcd>& locals);

  int num_sites() const { return static_cast<int>(dims_.size()); }
  int phys_dim(int site) const { return dims_[site]; }
  // Bond b sits between sites (b, b+1); its dimension is the number of
  // retained Schmidt coefficients.
  int bond_dim(int bond) const { return static_cast<int>(weights_[bond + 1].size()); }
  int max_bond_dim() const;
  const Eigen::VectorXd& schmidt_weights(int bond) const { return weights_[bond + 1]; }

  // <ψ| op_site |ψ> assuming canonical form (environments are identities).
  std::complex<double> expectation_local(int site, const Eigen::MatrixXcd& op) const;
  // <ψ| op_{b,b+1} |ψ> for an operator on the two sites of bond b, indexed
  // site-major: (s1 d2 + s2).
  std::complex<double> expectation_two_site(int bond, const Eigen::MatrixXcd& op) const;

  // Applies a two-site unitary on bond b and re-truncates.  The caller is
  // responsible for gate unitarity (validated once per cached gate by the
  // evolution driver).  Throws DegenerateStateError / NumericalError.
  GateResult apply_two_site_gate(int bond, const Eigen::MatrixXcd& gate,
                                 const TruncationPolicy& policy);

  // Full state vector with site 0 on the most significant index.  Intended
  // for small lattices and cross-checks.
  Eigen::VectorXcd to_dense(double dim_cap = 1 << 22) const;

  // <ψ|ψ> by explicit transfer-matrix contraction (gauge-independent).
  double contracted_norm() const;

 private:
  std::vector<int> dims_;
  // gammas_[site][phys] is χ_left × χ_right.
  std::vector<std::vector<Eigen::MatrixXcd>> gammas_;
  // weights_[j] sits left of site j; weights_[0] and weights_[L] are {1}.
  std::vector<Eigen::VectorXd> weights_;
};

// Convenience wrapper matching the evolution engine's bookkeeping: validates
// gate unitarity (1e-10), applies the gate, renormalises, and appends the
// truncation event to the ledger.
GateResult apply_two_site_gate(MatrixProductState& mps, int bond,
                               const Eigen::MatrixXcd& gate,
                               const TruncationPolicy& policy,
                               TruncationLedger& ledger, long long step = -1);

}  // namespace hqlat
