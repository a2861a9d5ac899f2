#include "hqlat/mps.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hqlat {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Directions with weight below this are unpopulated (or were just cut) and
// must not be amplified when dividing out environment weights.
constexpr double kWeightClamp = 1e-12;

VectorXd clamped_inverse(const VectorXd& w) {
  VectorXd inv(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    inv(i) = (w(i) < kWeightClamp) ? 0.0 : 1.0 / w(i);
  }
  return inv;
}

}  // namespace

void TruncationLedger::append(long long step, int bond, double eps, int kept) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("TruncationLedger: eps outside [0, 1]: " +
                                std::to_string(eps));
  }
  product_ *= (1.0L - 2.0L * static_cast<long double>(eps));
  sum_ += eps;
  ++count_;
  if (keep_records_) records_.push_back({step, bond, eps, kept});
}

SplitResult split_and_truncate(const Eigen::MatrixXcd& theta,
                               const TruncationPolicy& policy) {
  if (policy.chi_max < 1) {
    throw std::invalid_argument("split_and_truncate: chi_max must be >= 1");
  }
  // Jacobi SVD: deterministic and accurate for the small matrices the
  // two-site update produces (dimensions are χ·d on each side).
  Eigen::JacobiSVD<MatrixXcd> svd(theta, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const VectorXd& sv = svd.singularValues();  // sorted descending

  const double norm_old = sv.norm();
  int above = 0;
  while (above < sv.size() && sv(above) > policy.epsilon0) ++above;
  if (above == 0) {
    throw DegenerateStateError(
        "split_and_truncate: no Schmidt coefficient above threshold " +
        std::to_string(policy.epsilon0) + " (largest: " +
        std::to_string(sv.size() > 0 ? sv(0) : 0.0) + ")");
  }
  const int kept = std::min(policy.chi_max, above);
  const double norm_new = sv.head(kept).norm();

  SplitResult r;
  r.kept = kept;
  r.norm_old = norm_old;
  r.norm_new = norm_new;
  const double ratio = norm_new / norm_old;
  r.eps = std::max(0.0, 1.0 - ratio * ratio);
  r.u = svd.matrixU().leftCols(kept);
  r.weights = sv.head(kept) / norm_new;  // Σ w² = 1
  r.vh = svd.matrixV().leftCols(kept).adjoint();
  return r;
}

MatrixProductState MatrixProductState::from_product_state(
    const std::vector<Eigen::VectorXcd>& locals) {
  if (locals.empty()) {
    throw std::invalid_argument("from_product_state: no local vectors");
  }
  MatrixProductState mps;
  const int num = static_cast<int>(locals.size());
  mps.dims_.resize(num);
  mps.gammas_.resize(num);
  mps.weights_.assign(num + 1, VectorXd::Ones(1));
  for (int j = 0; j < num; ++j) {
    const VectorXcd& v = locals[j];
    if (v.size() < 1) {
      throw std::invalid_argument("from_product_state: empty local vector at site " +
                                  std::to_string(j + 1));
    }
    if (std::abs(v.norm() - 1.0) > 1e-10) {
      throw std::invalid_argument(
          "from_product_state: local vector at site " + std::to_string(j + 1) +
          " is not normalised (|v| = " + std::to_string(v.norm()) + ")");
    }
    mps.dims_[j] = static_cast<int>(v.size());
    mps.gammas_[j].resize(mps.dims_[j]);
    for (int s = 0; s < mps.dims_[j]; ++s) {
      mps.gammas_[j][s] = MatrixXcd::Constant(1, 1, v(s));
    }
  }
  return mps;
}

int MatrixProductState::max_bond_dim() const {
  int chi = 1;
  for (const VectorXd& w : weights_) chi = std::max(chi, static_cast<int>(w.size()));
  return chi;
}

std::complex<double> MatrixProductState::expectation_local(
    int site, const Eigen::MatrixXcd& op) const {
  const int d = dims_[site];
  if (op.rows() != d || op.cols() != d) {
    throw std::invalid_argument("expectation_local: operator dimension " +
                                std::to_string(op.rows()) + " != local dimension " +
                                std::to_string(d));
  }
  const VectorXd& wl = weights_[site];
  const VectorXd& wr = weights_[site + 1];
  // A[s] = diag(wl) Γ[s] diag(wr); <O> = Σ_{s,s'} O(s',s) <A[s'], A[s]>_F.
  std::vector<MatrixXcd> a(d);
  for (int s = 0; s < d; ++s) {
    a[s] = wl.asDiagonal() * gammas_[site][s] * wr.asDiagonal();
  }
  std::complex<double> val = 0.0;
  for (int sp = 0; sp < d; ++sp) {
    for (int s = 0; s < d; ++s) {
      if (op(sp, s) == 0.0) continue;
      val += op(sp, s) * (a[sp].conjugate().cwiseProduct(a[s])).sum();
    }
  }
  return val;
}

std::complex<double> MatrixProductState::expectation_two_site(
    int bond, const Eigen::MatrixXcd& op) const {
  const int j = bond;
  const int d1 = dims_[j];
  const int d2 = dims_[j + 1];
  if (op.rows() != d1 * d2 || op.cols() != d1 * d2) {
    throw std::invalid_argument("expectation_two_site: operator dimension mismatch");
  }
  const VectorXd& wl = weights_[j];
  const VectorXd& wm = weights_[j + 1];
  const VectorXd& wr = weights_[j + 2];
  std::vector<MatrixXcd> left(d1), right(d2);
  for (int s = 0; s < d1; ++s) {
    left[s] = wl.asDiagonal() * gammas_[j][s] * wm.asDiagonal();
  }
  for (int s = 0; s < d2; ++s) {
    right[s] = gammas_[j + 1][s] * wr.asDiagonal();
  }
  std::vector<MatrixXcd> theta(d1 * d2);
  for (int s1 = 0; s1 < d1; ++s1)
    for (int s2 = 0; s2 < d2; ++s2) theta[s1 * d2 + s2] = left[s1] * right[s2];

  std::complex<double> val = 0.0;
  for (int r = 0; r < d1 * d2; ++r) {
    for (int c = 0; c < d1 * d2; ++c) {
      if (op(r, c) == 0.0) continue;
      val += op(r, c) * (theta[r].conjugate().cwiseProduct(theta[c])).sum();
    }
  }
  return val;
}

GateResult MatrixProductState::apply_two_site_gate(int bond,
                                                   const Eigen::MatrixXcd& gate,
                                                   const TruncationPolicy& policy) {
  const int j = bond;
  if (j < 0 || j + 1 >= num_sites()) {
    throw std::invalid_argument("apply_two_site_gate: bond index out of range");
  }
  const int d1 = dims_[j];
  const int d2 = dims_[j + 1];
  if (gate.rows() != d1 * d2 || gate.cols() != d1 * d2) {
    throw std::invalid_argument("apply_two_site_gate: gate dimension " +
                                std::to_string(gate.rows()) +
                                " != two-site dimension " + std::to_string(d1 * d2));
  }
  const VectorXd& wl = weights_[j];
  const VectorXd& wm = weights_[j + 1];
  const VectorXd& wr = weights_[j + 2];
  const int xl = static_cast<int>(wl.size());
  const int xr = static_cast<int>(wr.size());

  // Two-site tensor with all environment weights folded in.
  std::vector<MatrixXcd> left(d1), right(d2);
  for (int s = 0; s < d1; ++s) {
    left[s] = wl.asDiagonal() * gammas_[j][s] * wm.asDiagonal();
  }
  for (int s = 0; s < d2; ++s) {
    right[s] = gammas_[j + 1][s] * wr.asDiagonal();
  }

  // T[(s1 s2), (a c)] = Θ blocks flattened row-major, so the gate acts as a
  // plain matrix product on the physical pair index.
  MatrixXcd t(d1 * d2, xl * xr);
  for (int s1 = 0; s1 < d1; ++s1) {
    for (int s2 = 0; s2 < d2; ++s2) {
      const MatrixXcd block = left[s1] * right[s2];
      for (int a = 0; a < xl; ++a) {
        t.block(s1 * d2 + s2, a * xr, 1, xr) = block.row(a);
      }
    }
  }
  t = gate * t;

  // Θ[(a d1 + s1), (s2 χR + c)] for the Schmidt split between the sites.
  MatrixXcd theta(xl * d1, d2 * xr);
  for (int s1 = 0; s1 < d1; ++s1) {
    for (int s2 = 0; s2 < d2; ++s2) {
      for (int a = 0; a < xl; ++a) {
        theta.block(a * d1 + s1, s2 * xr, 1, xr) = t.block(s1 * d2 + s2, a * xr, 1, xr);
      }
    }
  }

  const SplitResult split = split_and_truncate(theta, policy);
  if (!std::isfinite(split.eps) || !std::isfinite(split.norm_new)) {
    throw NumericalError("apply_two_site_gate: non-finite truncation weight", -1, bond);
  }
  const int chi = split.kept;

  // Restore canonical form: divide the environment weights back out.
  const VectorXd inv_l = clamped_inverse(wl);
  const VectorXd inv_r = clamped_inverse(wr);
  std::vector<MatrixXcd> gl(d1, MatrixXcd(xl, chi));
  for (int s1 = 0; s1 < d1; ++s1) {
    for (int a = 0; a < xl; ++a) {
      gl[s1].row(a) = inv_l(a) * split.u.row(a * d1 + s1);
    }
  }
  std::vector<MatrixXcd> gr(d2, MatrixXcd(chi, xr));
  for (int s2 = 0; s2 < d2; ++s2) {
    for (int c = 0; c < xr; ++c) {
      gr[s2].col(c) = inv_r(c) * split.vh.col(s2 * xr + c);
    }
  }
  gammas_[j] = std::move(gl);
  gammas_[j + 1] = std::move(gr);
  weights_[j + 1] = split.weights;
  return {split.eps, chi};
}

Eigen::VectorXcd MatrixProductState::to_dense(double dim_cap) const {
  double dim = 1.0;
  for (int d : dims_) dim *= d;
  if (dim > dim_cap) {
    throw ResourceLimitError("to_dense: full dimension " + std::to_string(dim) +
                             " exceeds cap " + std::to_string(dim_cap));
  }
  // Accumulate left-to-right; rows enumerate the already-contracted sites
  // (site 0 most significant), columns the open bond.
  MatrixXcd acc = MatrixXcd::Ones(1, 1);
  for (int j = 0; j < num_sites(); ++j) {
    const int d = dims_[j];
    const int chi = static_cast<int>(weights_[j + 1].size());
    MatrixXcd next(acc.rows() * d, chi);
    for (Eigen::Index x = 0; x < acc.rows(); ++x) {
      for (int s = 0; s < d; ++s) {
        next.row(x * d + s) = acc.row(x) * gammas_[j][s];
      }
    }
    next *= weights_[j + 1].asDiagonal();
    acc = std::move(next);
  }
  return acc.col(0);
}

double MatrixProductState::contracted_norm() const {
  MatrixXcd env = MatrixXcd::Ones(1, 1);
  for (int j = 0; j < num_sites(); ++j) {
    const int chi = static_cast<int>(weights_[j + 1].size());
    MatrixXcd next = MatrixXcd::Zero(chi, chi);
    for (int s = 0; s < dims_[j]; ++s) {
      const MatrixXcd b = gammas_[j][s] * weights_[j + 1].asDiagonal();
      next += b.adjoint() * env * b;
    }
    env = std::move(next);
  }
  return std::sqrt(std::abs(env(0, 0).real()));
}

GateResult apply_two_site_gate(MatrixProductState& mps, int bond,
                               const Eigen::MatrixXcd& gate,
                               const TruncationPolicy& policy,
                               TruncationLedger& ledger, long long step) {
  const MatrixXcd check = gate.adjoint() * gate;
  const double dev =
      (check - MatrixXcd::Identity(gate.rows(), gate.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw std::invalid_argument("apply_two_site_gate: gate is not unitary (|U†U − 1| = " +
                                std::to_string(dev) + ")");
  }
  const GateResult r = mps.apply_two_site_gate(bond, gate, policy);
  ledger.append(step, bond, r.eps, r.kept);
  return r;
}

}  // namespace hqlat
