#include "hqlat/tebd.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace hqlat {

namespace {

using Eigen::MatrixXcd;
using std::complex;

constexpr double kHermitianTol = 1e-10;
constexpr double kUnitaryTol = 1e-10;

}  // namespace

TrotterCoefficients TrotterCoefficients::second_order() {
  return {{0.5, 0.5}, {1.0, 0.0}};
}

void TrotterCoefficients::validate() const {
  if (c.size() != d.size() || c.empty()) {
    throw std::invalid_argument(
        "TrotterCoefficients: coefficient lists must be non-empty and equal length");
  }
  double sc = 0.0, sd = 0.0;
  for (double x : c) sc += x;
  for (double x : d) sd += x;
  if (std::abs(sc - 1.0) > 1e-12 || std::abs(sd - 1.0) > 1e-12) {
    throw std::invalid_argument("TrotterCoefficients: coefficients must sum to 1 (Σc = " +
                                std::to_string(sc) + ", Σd = " + std::to_string(sd) + ")");
  }
}

std::vector<LayerStep> TrotterPlan::fused_block(long long nsteps) const {
  std::vector<LayerStep> seq;
  for (long long s = 0; s < nsteps; ++s) {
    for (const LayerStep& sub : substeps) {
      if (!seq.empty() && seq.back().first_layer == sub.first_layer) {
        seq.back().fraction += sub.fraction;  // merge adjacent same-layer applications
      } else {
        seq.push_back(sub);
      }
    }
  }
  return seq;
}

TrotterPlan build_plan(const LatticeSpec& lattice, double tau,
                       const TrotterCoefficients& coeffs) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("build_plan: tau must be positive and finite");
  }
  coeffs.validate();
  TrotterPlan plan;
  plan.coeffs = coeffs;
  plan.layers = even_odd_split(lattice);
  plan.tau = tau;
  for (std::size_t l = 0; l < coeffs.c.size(); ++l) {
    if (coeffs.c[l] != 0.0) plan.substeps.push_back({true, coeffs.c[l]});
    if (coeffs.d[l] != 0.0) plan.substeps.push_back({false, coeffs.d[l]});
  }
  return plan;
}

Eigen::MatrixXcd exponentiate_bond(const Eigen::MatrixXcd& h, double dt) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("exponentiate_bond: matrix is not square");
  }
  const double herm_dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw std::invalid_argument("exponentiate_bond: matrix is not Hermitian (|h − h†| = " +
                                std::to_string(herm_dev) + ")");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  if (es.info() != Eigen::Success) {
    throw NumericalError("exponentiate_bond: eigendecomposition failed");
  }
  const Eigen::VectorXd& ev = es.eigenvalues();
  Eigen::VectorXcd phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    phases(i) = std::exp(complex<double>(0.0, -dt * ev(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

void SimulationConfig::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("SimulationConfig: tau must be positive");
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw std::invalid_argument("SimulationConfig: t_final must be >= 0");
  }
  if (measure_stride < 1) {
    throw std::invalid_argument("SimulationConfig: measure_stride must be >= 1");
  }
  if (policy.chi_max < 1) {
    throw std::invalid_argument("SimulationConfig: chi_max must be >= 1");
  }
  if (!(policy.epsilon0 >= 0.0)) {
    throw std::invalid_argument("SimulationConfig: epsilon0 must be >= 0");
  }
}

namespace {

// Per-run sampling machinery: cached local observable matrices plus the bond
// Hamiltonians for the energy ledger.
struct Sampler {
  const LatticeSpec& lattice;
  const ObservableSet& set;
  std::vector<int> jc_sites;
  std::vector<MatrixXcd> tls_num, phot_num, pol_num, proj_lo, proj_up;
  MatrixXcd qubit_num;
  const std::vector<MatrixXcd>& bond_h;

  Sampler(const LatticeSpec& lat, const ObservableSet& s,
          const std::vector<MatrixXcd>& bonds)
      : lattice(lat), set(s), bond_h(bonds) {
    for (int j = lattice.first_jc_site(); j < lattice.num_sites(); ++j) {
      jc_sites.push_back(j);
      const SiteSpec& site = lattice.sites[j];
      tls_num.push_back(local_operator(site, LocalOp::tls_number));
      phot_num.push_back(local_operator(site, LocalOp::photon_number));
      pol_num.push_back(local_operator(site, LocalOp::polariton_number));
      if (set.branches) {
        proj_lo.push_back(local_operator(site, LocalOp::lower_branch_projector));
        proj_up.push_back(local_operator(site, LocalOp::upper_branch_projector));
      }
    }
    if (lattice.has_activation_qubit()) {
      qubit_num = local_operator(lattice.sites[0], LocalOp::tls_number);
    }
  }

  void sample(const MatrixProductState& mps, double t, double eps_total,
              ObservableSeries& out, long long step) const {
    out.times.push_back(t);
    const std::size_t n = jc_sites.size();
    std::vector<double> tls(n), phot(n), pol(n), plo, pup;
    if (set.branches) {
      plo.resize(n);
      pup.resize(n);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int j = jc_sites[i];
      tls[i] = mps.expectation_local(j, tls_num[i]).real();
      phot[i] = mps.expectation_local(j, phot_num[i]).real();
      pol[i] = mps.expectation_local(j, pol_num[i]).real();
      total += pol[i];
      if (set.branches) {
        plo[i] = mps.expectation_local(j, proj_lo[i]).real();
        pup[i] = mps.expectation_local(j, proj_up[i]).real();
      }
    }
    if (out.has_activation) {
      const double q = mps.expectation_local(0, qubit_num).real();
      out.activation_excitation.push_back(q);
      total += q;
    }
    double energy = 0.0;
    for (int b = 0; b < lattice.num_bonds(); ++b) {
      energy += mps.expectation_two_site(b, bond_h[b]).real();
    }
    const double norm = mps.contracted_norm();
    if (!std::isfinite(norm) || !std::isfinite(energy) || !std::isfinite(total)) {
      throw NumericalError("run: non-finite observable at t = " + std::to_string(t),
                           step, -1);
    }
    out.tls_excitation.push_back(std::move(tls));
    out.photon_number.push_back(std::move(phot));
    out.polariton_number.push_back(std::move(pol));
    if (set.branches) {
      out.branch_lower.push_back(std::move(plo));
      out.branch_upper.push_back(std::move(pup));
    }
    out.norm.push_back(norm);
    out.energy.push_back(energy);
    out.total_excitation.push_back(total);
    out.eps_trunc.push_back(eps_total);
  }
};

}  // namespace

double suggested_frame_shift(const LatticeSpec& lattice) {
  return lattice.sites[lattice.first_jc_site()].jc.omega0;
}

RunResult run(const LatticeSpec& lattice, InitialStateKind initial,
              const SimulationConfig& config) {
  lattice.validate();
  config.validate();

  const std::vector<MatrixXcd> bond_h = bond_hamiltonians(lattice);

  // Gates evolve in a frame rotating at e0 per excitation; measurements
  // (including the energy) use the unshifted bond Hamiltonians.
  const double e0 =
      config.frame_shift ? *config.frame_shift : suggested_frame_shift(lattice);
  LatticeSpec frame_lattice = lattice;
  if (e0 != 0.0) {
    for (SiteSpec& site : frame_lattice.sites) {
      if (site.is_jc()) {
        site.jc.omega -= e0;
        site.jc.omega0 -= e0;
      } else {
        site.omega_A -= e0;
      }
    }
  }
  const std::vector<MatrixXcd> frame_h =
      e0 != 0.0 ? bond_hamiltonians(frame_lattice) : bond_h;

  const TrotterPlan plan = build_plan(lattice, config.tau);

  RunResult result;
  result.ledger = TruncationLedger(config.keep_truncation_records);

  MatrixProductState mps =
      MatrixProductState::from_product_state(initial_state(lattice, initial));

  Sampler sampler(lattice, config.observables, bond_h);
  result.series.jc_sites = sampler.jc_sites;
  result.series.has_activation = lattice.has_activation_qubit();

  const long long nsteps =
      static_cast<long long>(std::ceil(config.t_final / config.tau - 1e-9));

  // Gate cache: gates[bond] maps the applied dt to exp(−i dt H_b); validated
  // as unitary once at construction.
  std::vector<std::map<double, MatrixXcd>> gates(lattice.num_bonds());
  auto gate_for = [&](int bond, double dt) -> const MatrixXcd& {
    auto it = gates[bond].find(dt);
    if (it == gates[bond].end()) {
      MatrixXcd u = exponentiate_bond(frame_h[bond], dt);
      const double dev =
          (u.adjoint() * u - MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
      if (dev > kUnitaryTol) {
        throw NumericalError("run: cached gate lost unitarity on bond " +
                                 std::to_string(bond),
                             -1, bond);
      }
      it = gates[bond].emplace(dt, std::move(u)).first;
    }
    return it->second;
  };

  sampler.sample(mps, 0.0, result.ledger.total_error(), result.series, 0);

  long long step = 0;
  while (step < nsteps) {
    const long long block = std::min<long long>(config.measure_stride, nsteps - step);
    for (const LayerStep& layer : plan.fused_block(block)) {
      const std::vector<int>& bonds =
          layer.first_layer ? plan.layers.first_layer : plan.layers.second_layer;
      const double dt = layer.fraction * config.tau;
      for (int b : bonds) {
        const GateResult r = mps.apply_two_site_gate(b, gate_for(b, dt), config.policy);
        if (!std::isfinite(r.eps)) {
          throw NumericalError("run: non-finite truncation weight", step, b);
        }
        result.ledger.append(step, b, r.eps, r.kept);
      }
    }
    step += block;
    sampler.sample(mps, step * config.tau, result.ledger.total_error(), result.series,
                   step);
    result.max_bond_dim = std::max(result.max_bond_dim, mps.max_bond_dim());
  }
  result.steps = nsteps;
  result.max_bond_dim = std::max(result.max_bond_dim, mps.max_bond_dim());
  return result;
}

}  // namespace hqlat
