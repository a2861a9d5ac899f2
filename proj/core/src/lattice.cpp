#include "hqlat/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hqlat/linalg.hpp"

namespace hqlat {

namespace {

using Eigen::MatrixXcd;

// Index of |s, n> in the TLS-major local basis of a unit (s = 0 dn, 1 up).
inline int unit_index(int s, int n, int n_max) { return s * (n_max + 1) + n; }

void require_jc(const SiteSpec& site, const char* what) {
  if (!site.is_jc()) {
    throw std::invalid_argument(std::string(what) +
                                ": operator is not defined on the activation qubit");
  }
}

MatrixXcd branch_projector(const SiteSpec& site, Branch branch) {
  // |1,α> = γ_1α |dn,1> + ρ_1α |up,0> within the unit's n = 1 doublet.
  const PolaritonCoeffs c = polariton_coefficients(site.jc, 1);
  Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(site.dim());
  vec(unit_index(0, 1, site.n_max)) = c.gamma(branch);
  vec(unit_index(1, 0, site.n_max)) = c.rho(branch);
  return vec * vec.adjoint();
}

}  // namespace

SiteSpec SiteSpec::activation(double omega_A) {
  SiteSpec s;
  s.kind = Kind::activation_qubit;
  s.omega_A = omega_A;
  return s;
}

SiteSpec SiteSpec::jc_unit(const JCParams& params, int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("SiteSpec: Fock cutoff n_max must be >= 1");
  }
  SiteSpec s;
  s.kind = Kind::jc_unit;
  s.jc = params;
  s.n_max = n_max;
  return s;
}

bool LatticeSpec::has_activation_qubit() const {
  return !sites.empty() && sites.front().kind == SiteSpec::Kind::activation_qubit;
}

int LatticeSpec::first_jc_site() const { return has_activation_qubit() ? 1 : 0; }

double LatticeSpec::total_dim() const {
  double dim = 1.0;
  for (const SiteSpec& s : sites) dim *= s.dim();
  return dim;
}

void LatticeSpec::validate() const {
  if (sites.empty()) {
    throw std::invalid_argument("LatticeSpec: lattice has no sites");
  }
  for (int j = 0; j < num_sites(); ++j) {
    const SiteSpec& s = sites[j];
    if (s.kind == SiteSpec::Kind::activation_qubit && j != 0) {
      throw std::invalid_argument(
          "LatticeSpec: activation qubit allowed only at site 1, found at site " +
          std::to_string(j + 1));
    }
    if (s.is_jc() && s.n_max < 1) {
      throw std::invalid_argument("LatticeSpec: jc unit with n_max < 1 at site " +
                                  std::to_string(j + 1));
    }
  }
  if (num_bonds() != num_sites() - 1) {
    throw std::invalid_argument(
        "LatticeSpec: expected " + std::to_string(num_sites() - 1) + " bonds, got " +
        std::to_string(num_bonds()));
  }
  for (int b = 0; b < num_bonds(); ++b) {
    if (bonds[b].left != b) {
      throw std::invalid_argument("LatticeSpec: bond " + std::to_string(b) +
                                  " does not connect sites (" + std::to_string(b) +
                                  ", " + std::to_string(b + 1) + ")");
    }
    if (!std::isfinite(bonds[b].coupling)) {
      throw std::invalid_argument("LatticeSpec: non-finite coupling on bond " +
                                  std::to_string(b));
    }
  }
}

Eigen::MatrixXcd local_operator(const SiteSpec& site, LocalOp op) {
  const int dim = site.dim();
  MatrixXcd m = MatrixXcd::Zero(dim, dim);

  if (!site.is_jc()) {
    // Bare qubit: basis {|dn>, |up>}.
    switch (op) {
      case LocalOp::tls_raise:
        m(1, 0) = 1.0;
        return m;
      case LocalOp::tls_lower:
        m(0, 1) = 1.0;
        return m;
      case LocalOp::tls_number:
        m(1, 1) = 1.0;
        return m;
      default:
        require_jc(site, "local_operator");
    }
  }

  const int n_max = site.n_max;
  switch (op) {
    case LocalOp::tls_raise:
      for (int n = 0; n <= n_max; ++n) m(unit_index(1, n, n_max), unit_index(0, n, n_max)) = 1.0;
      break;
    case LocalOp::tls_lower:
      for (int n = 0; n <= n_max; ++n) m(unit_index(0, n, n_max), unit_index(1, n, n_max)) = 1.0;
      break;
    case LocalOp::tls_number:
      for (int n = 0; n <= n_max; ++n) m(unit_index(1, n, n_max), unit_index(1, n, n_max)) = 1.0;
      break;
    case LocalOp::photon_annihilate:
      // <s,n−1| a |s,n> = √n; the cutoff drops a†|s,n_max>.
      for (int s = 0; s <= 1; ++s)
        for (int n = 1; n <= n_max; ++n)
          m(unit_index(s, n - 1, n_max), unit_index(s, n, n_max)) = std::sqrt(double(n));
      break;
    case LocalOp::photon_number:
      for (int s = 0; s <= 1; ++s)
        for (int n = 0; n <= n_max; ++n)
          m(unit_index(s, n, n_max), unit_index(s, n, n_max)) = double(n);
      break;
    case LocalOp::polariton_number:
      for (int s = 0; s <= 1; ++s)
        for (int n = 0; n <= n_max; ++n)
          m(unit_index(s, n, n_max), unit_index(s, n, n_max)) = double(n + s);
      break;
    case LocalOp::lower_branch_projector:
      return branch_projector(site, Branch::lower);
    case LocalOp::upper_branch_projector:
      return branch_projector(site, Branch::upper);
  }
  return m;
}

std::vector<std::string> local_basis_labels(const SiteSpec& site) {
  if (!site.is_jc()) return {"dn", "up"};
  std::vector<std::string> labels;
  labels.reserve(site.dim());
  for (int s = 0; s <= 1; ++s)
    for (int n = 0; n <= site.n_max; ++n)
      labels.push_back((s == 0 ? "dn," : "up,") + std::to_string(n));
  return labels;
}

Eigen::MatrixXcd onsite_hamiltonian(const SiteSpec& site) {
  if (!site.is_jc()) {
    MatrixXcd h = MatrixXcd::Zero(2, 2);
    h(1, 1) = site.omega_A;
    return h;
  }
  const int n_max = site.n_max;
  const int dim = site.dim();
  MatrixXcd h = MatrixXcd::Zero(dim, dim);
  for (int s = 0; s <= 1; ++s) {
    for (int n = 0; n <= n_max; ++n) {
      h(unit_index(s, n, n_max), unit_index(s, n, n_max)) =
          site.jc.omega * n + site.jc.omega0 * s;
    }
  }
  // g (σ+ a + σ− a†): couples |dn,n> <-> |up,n−1> with amplitude g√n.
  for (int n = 1; n <= n_max; ++n) {
    const double amp = site.jc.g * std::sqrt(double(n));
    h(unit_index(1, n - 1, n_max), unit_index(0, n, n_max)) = amp;
    h(unit_index(0, n, n_max), unit_index(1, n - 1, n_max)) = amp;
  }
  return h;
}

std::vector<Eigen::MatrixXcd> bond_hamiltonians(const LatticeSpec& lattice) {
  lattice.validate();
  const int nb = lattice.num_bonds();
  std::vector<MatrixXcd> hs;
  hs.reserve(nb);
  for (int b = 0; b < nb; ++b) {
    const SiteSpec& sl = lattice.sites[b];
    const SiteSpec& sr = lattice.sites[b + 1];
    const int dl = sl.dim();
    const int dr = sr.dim();
    // Chain ends carry their full on-site term; interior sites split 1/2-1/2
    // between their two bonds.
    const double wl = (b == 0) ? 1.0 : 0.5;
    const double wr = (b == nb - 1) ? 1.0 : 0.5;

    const MatrixXcd idl = MatrixXcd::Identity(dl, dl);
    const MatrixXcd idr = MatrixXcd::Identity(dr, dr);
    const MatrixXcd sp_l = local_operator(sl, LocalOp::tls_raise);
    const MatrixXcd sm_l = local_operator(sl, LocalOp::tls_lower);
    const MatrixXcd sp_r = local_operator(sr, LocalOp::tls_raise);
    const MatrixXcd sm_r = local_operator(sr, LocalOp::tls_lower);

    MatrixXcd h = lattice.bonds[b].coupling * (kron(sp_l, sm_r) + kron(sm_l, sp_r));
    h += wl * kron(onsite_hamiltonian(sl), idr);
    h += wr * kron(idl, onsite_hamiltonian(sr));
    hs.push_back(std::move(h));
  }
  return hs;
}

BondPartition even_odd_split(const LatticeSpec& lattice) {
  BondPartition p;
  for (int b = 0; b < lattice.num_bonds(); ++b) {
    (b % 2 == 0 ? p.first_layer : p.second_layer).push_back(b);
  }
  return p;
}

std::vector<Eigen::VectorXcd> initial_state(const LatticeSpec& lattice,
                                            InitialStateKind kind) {
  lattice.validate();
  const int num = lattice.num_sites();
  std::vector<Eigen::VectorXcd> locals(num);
  for (int j = 0; j < num; ++j) {
    locals[j] = Eigen::VectorXcd::Zero(lattice.sites[j].dim());
    locals[j](0) = 1.0;  // |dn> or |dn,0>
  }
  switch (kind) {
    case InitialStateKind::activation_excited: {
      if (!lattice.has_activation_qubit()) {
        throw std::invalid_argument(
            "initial_state: activation-excited requires an activation qubit");
      }
      locals[0](0) = 0.0;
      locals[0](1) = 1.0;  // |up>
      break;
    }
    case InitialStateKind::centered_polariton: {
      if (lattice.has_activation_qubit()) {
        throw std::invalid_argument(
            "initial_state: centered-polariton is defined for qubit-free lattices");
      }
      if (num % 2 == 0) {
        throw std::invalid_argument(
            "initial_state: centered-polariton requires an odd number of sites");
      }
      const int mid = (num - 1) / 2;
      const SiteSpec& site = lattice.sites[mid];
      const PolaritonCoeffs c = polariton_coefficients(site.jc, 1);
      locals[mid].setZero();
      locals[mid](1) = c.gamma_minus;               // |dn,1>
      locals[mid](site.n_max + 1) = c.rho_minus;    // |up,0>
      break;
    }
  }
  return locals;
}

}  // namespace hqlat
