#include "hqlat/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "hqlat/linalg.hpp"

namespace hqlat {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

void check_dim_cap(const LatticeSpec& lattice, double dim_cap, const char* what) {
  const double dim = lattice.total_dim();
  if (dim > dim_cap) {
    throw ResourceLimitError(std::string(what) + ": dense dimension " +
                             std::to_string(dim) + " exceeds cap " +
                             std::to_string(dim_cap));
  }
}

// Dimension of the block of sites [from, to).
Eigen::Index block_dim(const LatticeSpec& lattice, int from, int to) {
  Eigen::Index dim = 1;
  for (int j = from; j < to; ++j) dim *= lattice.sites[j].dim();
  return dim;
}

}  // namespace

Eigen::MatrixXcd build_dense_hamiltonian(const LatticeSpec& lattice, double dim_cap) {
  lattice.validate();
  check_dim_cap(lattice, dim_cap, "build_dense_hamiltonian");
  const Eigen::Index dim = static_cast<Eigen::Index>(lattice.total_dim());
  MatrixXcd h = MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < lattice.num_sites(); ++j) {
    h += embed_one_site(lattice, j, onsite_hamiltonian(lattice.sites[j]));
  }
  for (int b = 0; b < lattice.num_bonds(); ++b) {
    const SiteSpec& sl = lattice.sites[b];
    const SiteSpec& sr = lattice.sites[b + 1];
    const MatrixXcd exchange =
        kron(local_operator(sl, LocalOp::tls_raise), local_operator(sr, LocalOp::tls_lower)) +
        kron(local_operator(sl, LocalOp::tls_lower), local_operator(sr, LocalOp::tls_raise));
    h += lattice.bonds[b].coupling * embed_two_site(lattice, b, exchange);
  }
  return h;
}

SpectralDecomposition diagonalize(const Eigen::MatrixXcd& hermitian) {
  const double dev = (hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw std::invalid_argument("diagonalize: matrix is not Hermitian (|h − h†| = " +
                                std::to_string(dev) + ")");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hermitian);
  if (es.info() != Eigen::Success) {
    throw NumericalError("diagonalize: eigendecomposition failed");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXcd evolve_exact(const Eigen::VectorXcd& psi0, double t,
                              const SpectralDecomposition& spectral) {
  if (psi0.size() != spectral.eigenvectors.rows()) {
    throw std::invalid_argument("evolve_exact: state dimension mismatch");
  }
  VectorXcd coeffs = spectral.eigenvectors.adjoint() * psi0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    coeffs(i) *= std::exp(complex<double>(0.0, -t * spectral.eigenvalues(i)));
  }
  return spectral.eigenvectors * coeffs;
}

Eigen::VectorXcd dense_product_state(const LatticeSpec& lattice,
                                     const std::vector<Eigen::VectorXcd>& locals) {
  if (static_cast<int>(locals.size()) != lattice.num_sites()) {
    throw std::invalid_argument("dense_product_state: wrong number of local vectors");
  }
  check_dim_cap(lattice, 1 << 24, "dense_product_state");
  VectorXcd psi = VectorXcd::Ones(1);
  for (int j = 0; j < lattice.num_sites(); ++j) {
    const VectorXcd& v = locals[j];
    VectorXcd next(psi.size() * v.size());
    for (Eigen::Index a = 0; a < psi.size(); ++a) {
      next.segment(a * v.size(), v.size()) = psi(a) * v;
    }
    psi = std::move(next);
  }
  return psi;
}

Eigen::MatrixXcd embed_one_site(const LatticeSpec& lattice, int site,
                                const Eigen::MatrixXcd& op) {
  const Eigen::Index left = block_dim(lattice, 0, site);
  const Eigen::Index right = block_dim(lattice, site + 1, lattice.num_sites());
  return kron(kron(MatrixXcd::Identity(left, left), op),
              MatrixXcd::Identity(right, right));
}

Eigen::MatrixXcd embed_two_site(const LatticeSpec& lattice, int bond,
                                const Eigen::MatrixXcd& op) {
  const Eigen::Index left = block_dim(lattice, 0, bond);
  const Eigen::Index right = block_dim(lattice, bond + 2, lattice.num_sites());
  return kron(kron(MatrixXcd::Identity(left, left), op),
              MatrixXcd::Identity(right, right));
}

std::complex<double> local_expectation(const Eigen::VectorXcd& psi,
                                       const LatticeSpec& lattice, int site,
                                       const Eigen::MatrixXcd& op) {
  const int d = lattice.sites[site].dim();
  if (op.rows() != d || op.cols() != d) {
    throw std::invalid_argument("local_expectation: operator dimension mismatch");
  }
  const Eigen::Index left = block_dim(lattice, 0, site);
  const Eigen::Index right = block_dim(lattice, site + 1, lattice.num_sites());
  if (psi.size() != left * d * right) {
    throw std::invalid_argument("local_expectation: state dimension mismatch");
  }
  // ψ index = (a·d + s)·right + c with a the block left of `site`.
  complex<double> val = 0.0;
  for (Eigen::Index a = 0; a < left; ++a) {
    for (int sp = 0; sp < d; ++sp) {
      for (int s = 0; s < d; ++s) {
        if (op(sp, s) == 0.0) continue;
        const Eigen::Index row = (a * d + sp) * right;
        const Eigen::Index col = (a * d + s) * right;
        complex<double> acc = 0.0;
        for (Eigen::Index c = 0; c < right; ++c) {
          acc += std::conj(psi(row + c)) * psi(col + c);
        }
        val += op(sp, s) * acc;
      }
    }
  }
  return val;
}

std::pair<double, double> branch_populations(const Eigen::VectorXcd& psi,
                                             const LatticeSpec& lattice, int site) {
  const SiteSpec& s = lattice.sites[site];
  if (!s.is_jc()) {
    throw std::invalid_argument(
        "branch_populations: site carries no dressed doublet (activation qubit)");
  }
  const double lower =
      local_expectation(psi, lattice, site, local_operator(s, LocalOp::lower_branch_projector))
          .real();
  const double upper =
      local_expectation(psi, lattice, site, local_operator(s, LocalOp::upper_branch_projector))
          .real();
  return {lower, upper};
}

// ---- single-excitation sector -------------------------------------------------

SingleExcitationModel::SingleExcitationModel(const LatticeSpec& lattice)
    : lattice_(lattice) {
  lattice_.validate();
  has_qubit_ = lattice_.has_activation_qubit();
  const int first = lattice_.first_jc_site();
  const int n_jc = lattice_.num_sites() - first;
  const int dim = (has_qubit_ ? 1 : 0) + 2 * n_jc;
  h_ = MatrixXcd::Zero(dim, dim);

  if (has_qubit_) {
    h_(qubit_index(), qubit_index()) = lattice_.sites[0].omega_A;
  }
  for (int j = first; j < lattice_.num_sites(); ++j) {
    const JCParams& p = lattice_.sites[j].jc;
    h_(spin_index(j), spin_index(j)) = p.omega0;
    h_(photon_index(j), photon_index(j)) = p.omega;
    h_(spin_index(j), photon_index(j)) = p.g;  // σ+a within the unit
    h_(photon_index(j), spin_index(j)) = p.g;
  }
  for (const BondSpec& b : lattice_.bonds) {
    const int l = b.left;
    const int li = (has_qubit_ && l == 0) ? qubit_index() : spin_index(l);
    const int ri = spin_index(l + 1);
    h_(li, ri) += b.coupling;
    h_(ri, li) += b.coupling;
  }
  spectral_ = diagonalize(h_);
}

int SingleExcitationModel::qubit_index() const {
  if (!has_qubit_) {
    throw std::invalid_argument("SingleExcitationModel: lattice has no activation qubit");
  }
  return 0;
}

int SingleExcitationModel::spin_index(int site) const {
  const int first = lattice_.first_jc_site();
  if (site < first || site >= lattice_.num_sites()) {
    throw std::invalid_argument("SingleExcitationModel: not a jc site");
  }
  return (has_qubit_ ? 1 : 0) + 2 * (site - first);
}

int SingleExcitationModel::photon_index(int site) const {
  return spin_index(site) + 1;
}

Eigen::VectorXcd SingleExcitationModel::initial_amplitudes(InitialStateKind kind) const {
  VectorXcd amps = VectorXcd::Zero(dim());
  switch (kind) {
    case InitialStateKind::activation_excited:
      amps(qubit_index()) = 1.0;
      break;
    case InitialStateKind::centered_polariton: {
      if (has_qubit_) {
        throw std::invalid_argument(
            "SingleExcitationModel: centered-polariton needs a qubit-free lattice");
      }
      if (lattice_.num_sites() % 2 == 0) {
        throw std::invalid_argument(
            "SingleExcitationModel: centered-polariton requires odd site count");
      }
      const int mid = (lattice_.num_sites() - 1) / 2;
      const PolaritonCoeffs c = polariton_coefficients(lattice_.sites[mid].jc, 1);
      amps(photon_index(mid)) = c.gamma_minus;
      amps(spin_index(mid)) = c.rho_minus;
      break;
    }
  }
  return amps;
}

Eigen::VectorXcd SingleExcitationModel::evolve(const Eigen::VectorXcd& amps0,
                                               double t) const {
  return evolve_exact(amps0, t, spectral_);
}

double SingleExcitationModel::tls_excitation(const Eigen::VectorXcd& amps,
                                             int site) const {
  return std::norm(amps(spin_index(site)));
}

double SingleExcitationModel::photon_number(const Eigen::VectorXcd& amps,
                                            int site) const {
  return std::norm(amps(photon_index(site)));
}

std::pair<double, double> SingleExcitationModel::branch_populations(
    const Eigen::VectorXcd& amps, int site) const {
  const PolaritonCoeffs c = polariton_coefficients(lattice_.sites[site].jc, 1);
  const complex<double> phot = amps(photon_index(site));
  const complex<double> spin = amps(spin_index(site));
  const double lower = std::norm(c.gamma_minus * phot + c.rho_minus * spin);
  const double upper = std::norm(c.gamma_plus * phot + c.rho_plus * spin);
  return {lower, upper};
}

// ---- TEBD cross-check ----------------------------------------------------------

DeviationReport compare_with_tebd(const LatticeSpec& lattice, InitialStateKind initial,
                                  const SimulationConfig& config, double dim_cap) {
  lattice.validate();
  check_dim_cap(lattice, dim_cap, "compare_with_tebd");

  const RunResult tebd = run(lattice, initial, config);
  const ObservableSeries& series = tebd.series;

  const SpectralDecomposition spectral =
      diagonalize(build_dense_hamiltonian(lattice, dim_cap));
  const VectorXcd psi0 = dense_product_state(lattice, initial_state(lattice, initial));

  DeviationReport report;
  DeviationReport::Entry act{"activation", 0.0, 0.0};
  DeviationReport::Entry tls{"tls_excitation", 0.0, 0.0};
  DeviationReport::Entry phot{"photon_number", 0.0, 0.0};
  DeviationReport::Entry pol{"polariton_number", 0.0, 0.0};

  std::vector<MatrixXcd> tls_ops, phot_ops, pol_ops;
  for (int j : series.jc_sites) {
    tls_ops.push_back(local_operator(lattice.sites[j], LocalOp::tls_number));
    phot_ops.push_back(local_operator(lattice.sites[j], LocalOp::photon_number));
    pol_ops.push_back(local_operator(lattice.sites[j], LocalOp::polariton_number));
  }
  const MatrixXcd qubit_op = series.has_activation
                                 ? local_operator(lattice.sites[0], LocalOp::tls_number)
                                 : MatrixXcd();

  auto track = [](DeviationReport::Entry& e, double dev, double t) {
    if (dev > e.max_abs_dev) {
      e.max_abs_dev = dev;
      e.at_time = t;
    }
  };

  for (std::size_t k = 0; k < series.num_samples(); ++k) {
    const double t = series.times[k];
    const VectorXcd psi = evolve_exact(psi0, t, spectral);
    if (series.has_activation) {
      const double exact = local_expectation(psi, lattice, 0, qubit_op).real();
      track(act, std::abs(exact - series.activation_excitation[k]), t);
    }
    for (std::size_t i = 0; i < series.jc_sites.size(); ++i) {
      const int j = series.jc_sites[i];
      track(tls,
            std::abs(local_expectation(psi, lattice, j, tls_ops[i]).real() -
                     series.tls_excitation[k][i]),
            t);
      track(phot,
            std::abs(local_expectation(psi, lattice, j, phot_ops[i]).real() -
                     series.photon_number[k][i]),
            t);
      track(pol,
            std::abs(local_expectation(psi, lattice, j, pol_ops[i]).real() -
                     series.polariton_number[k][i]),
            t);
    }
  }

  if (series.has_activation) report.entries.push_back(act);
  report.entries.push_back(tls);
  report.entries.push_back(phot);
  report.entries.push_back(pol);
  for (const auto& e : report.entries) {
    if (e.max_abs_dev > report.overall) {
      report.overall = e.max_abs_dev;
      report.overall_time = e.at_time;
    }
  }
  return report;
}

}  // namespace hqlat
