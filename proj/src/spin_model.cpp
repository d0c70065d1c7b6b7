#include "discord/spin_model.hpp"

#include <cmath>
#include <string>

namespace discord {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

ComplexMatrix pauli(Axis axis) {
  ComplexMatrix s(2, 2);
  switch (axis) {
    case Axis::X: s << 0, 1, 1, 0; break;
    case Axis::Y: s << 0, -kI, kI, 0; break;
    case Axis::Z: s << 1, 0, 0, -1; break;
  }
  return s;
}

// kron over all factors, 2x2 identity except where `slots` places a matrix.
ComplexMatrix embed(int n_total, const std::vector<std::pair<int, ComplexMatrix>>& slots) {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int f = 0; f < n_total; ++f) {
    const ComplexMatrix* factor = &id2;
    for (const auto& [site, m] : slots)
      if (site == f) factor = &m;
    out = kron(out, *factor);
  }
  return out;
}

}  // namespace

void SystemSpec::validate() const {
  if (n_chain < 1) throw ConfigError("SystemSpec: n_chain must be >= 1");
  if (!(a > 0.0)) throw ConfigError("SystemSpec: a must be > 0");
  if (!(b >= 0.0)) throw ConfigError("SystemSpec: b must be >= 0");
  if (!(g_ref > 0.0)) throw ConfigError("SystemSpec: g_ref must be > 0");
  if (!(d_ref >= 0.0)) throw ConfigError("SystemSpec: d_ref must be >= 0");
  if (!std::isfinite(beta_omega_a) || !std::isfinite(beta_omega_b))
    throw ConfigError("SystemSpec: beta*omega must be finite");
}

void DensityMatrix::validate(bool check_spectrum) const {
  Eigen::Index expect = 1;
  for (int d : dims) expect *= d;
  if (expect != mat.rows() || mat.rows() != mat.cols())
    throw InvariantViolation("DensityMatrix: dims inconsistent with matrix size");
  const double herm = hermiticity_error(mat);
  if (!(herm <= kDensityTol))
    throw InvariantViolation("DensityMatrix: Hermiticity error " + std::to_string(herm));
  const double tr_err = std::abs(mat.trace() - std::complex<double>(1.0, 0.0));
  if (!(tr_err <= kDensityTol))
    throw InvariantViolation("DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
  if (check_spectrum) {
    const RealVector lam = hermitian_eigenvalues(mat);
    if (lam(0) < -kDensityTol)
      throw InvariantViolation("DensityMatrix: negative eigenvalue " + std::to_string(lam(0)));
  }
}

ComplexMatrix spin_operator(int n_total, int site, Axis axis) {
  if (site < 0 || site >= n_total)
    throw IndexOutOfRange("spin_operator: site " + std::to_string(site) + " of " +
                          std::to_string(n_total));
  return embed(n_total, {{site, 0.5 * pauli(axis)}});
}

Couplings couplings_from_geometry(const SystemSpec& spec) {
  spec.validate();
  const int n = spec.n_chain;
  Couplings c;
  c.d = Eigen::MatrixXd::Zero(n, n);
  c.g = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double sep = static_cast<double>(j - i);
      c.d(i, j) = c.d(j, i) = spec.d_ref / (sep * sep * sep);
    }
  for (int i = 0; i < n; ++i) {
    const double x = (i - (n - 1) / 2.0) * spec.a;
    const double r = std::hypot(x, spec.b);
    if (r == 0.0)
      throw DegenerateGeometry("couplings_from_geometry: impurity coincides with chain spin " +
                               std::to_string(i));
    const double ratio = spec.a / r;
    c.g(i) = spec.g_ref * ratio * ratio * ratio;
  }
  return c;
}

ComplexMatrix hamiltonian_dz(const Couplings& c, int n_total) {
  const int n_chain = n_total - 1;
  if (c.d.rows() != n_chain || c.d.cols() != n_chain)
    throw DimensionMismatch("hamiltonian_dz: coupling matrix is " + std::to_string(c.d.rows()) +
                            "x" + std::to_string(c.d.cols()) + " for " + std::to_string(n_chain) +
                            " chain spins");
  const Eigen::Index dim = Eigen::Index(1) << n_total;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < n_chain; ++i)
    for (int j = i + 1; j < n_chain; ++j) {
      const double dij = c.d(i, j);
      if (dij == 0.0) continue;
      // 3 I_iz I_jz - I_i . I_j = 2 I_iz I_jz - I_ix I_jx - I_iy I_jy
      h += dij * (2.0 * embed(n_total, {{i, 0.5 * pauli(Axis::Z)}, {j, 0.5 * pauli(Axis::Z)}}) -
                  embed(n_total, {{i, 0.5 * pauli(Axis::X)}, {j, 0.5 * pauli(Axis::X)}}) -
                  embed(n_total, {{i, 0.5 * pauli(Axis::Y)}, {j, 0.5 * pauli(Axis::Y)}}));
    }
  return h;
}

ComplexMatrix hamiltonian_zz(const Couplings& c, int n_total) {
  const int n_chain = n_total - 1;
  if (c.g.size() != n_chain)
    throw DimensionMismatch("hamiltonian_zz: " + std::to_string(c.g.size()) + " couplings for " +
                            std::to_string(n_chain) + " chain spins");
  const Eigen::Index dim = Eigen::Index(1) << n_total;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < n_chain; ++i) {
    if (c.g(i) == 0.0) continue;
    h += c.g(i) *
         embed(n_total, {{i, 0.5 * pauli(Axis::Z)}, {n_total - 1, 0.5 * pauli(Axis::Z)}});
  }
  return h;
}

DensityMatrix initial_state(const SystemSpec& spec) {
  spec.validate();
  auto single = [](double beta_omega) {
    const double tau = std::tanh(beta_omega / 2.0);
    ComplexMatrix f(2, 2);
    f << 0.5, 0.5 * tau, 0.5 * tau, 0.5;
    return f;
  };
  ComplexMatrix rho = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < spec.n_chain; ++i) rho = kron(rho, single(spec.beta_omega_a));
  rho = kron(rho, single(spec.beta_omega_b));
  DensityMatrix out;
  out.dims.assign(static_cast<std::size_t>(spec.n_total()), 2);
  out.mat = std::move(rho);
  return out;
}

DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& h, double t) {
  if (h.rows() != rho0.dim() || h.cols() != rho0.dim())
    throw DimensionMismatch("evolve: Hamiltonian dimension does not match state");
  return evolve(rho0, hermitian_eig(h), t);
}

DensityMatrix evolve(const DensityMatrix& rho0, const EigenDecomposition& h_eig, double t) {
  if (h_eig.eigenvectors.rows() != rho0.dim())
    throw DimensionMismatch("evolve: Hamiltonian dimension does not match state");
  const ComplexMatrix u = unitary_from_hermitian(h_eig, t);
  DensityMatrix out;
  out.dims = rho0.dims;
  ComplexMatrix tmp(rho0.dim(), rho0.dim());
  tmp.noalias() = u * rho0.mat;
  out.mat.resize(rho0.dim(), rho0.dim());
  out.mat.noalias() = tmp * u.adjoint();
  return out;
}

}  // namespace discord
