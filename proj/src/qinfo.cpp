#include "discord/qinfo.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace discord {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr std::complex<double> kI(0.0, 1.0);

inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

std::vector<int> chain_factors(const DensityMatrix& rho) {
  std::vector<int> keep(rho.dims.size() - 1);
  std::iota(keep.begin(), keep.end(), 0);
  return keep;
}

void require_impurity_last(const DensityMatrix& rho, const char* who) {
  if (rho.dims.size() < 2)
    throw DimensionMismatch(std::string(who) + ": need at least two tensor factors");
  if (rho.dims.back() != 2)
    throw DimensionMismatch(std::string(who) + ": measured factor must have dimension 2");
}

// +1 eigenvector of z . sigma; the branch keeps the normalisation away from 0.
Eigen::Vector2cd bloch_plus(const BlochVector& z) {
  Eigen::Vector2cd v;
  if (z.z3 >= 0.0) {
    const double n = std::sqrt(2.0 * (1.0 + z.z3));
    v << std::complex<double>(1.0 + z.z3, 0.0) / n, std::complex<double>(z.z1, z.z2) / n;
  } else {
    const double n = std::sqrt(2.0 * (1.0 - z.z3));
    v << std::complex<double>(z.z1, -z.z2) / n, std::complex<double>(1.0 - z.z3, 0.0) / n;
  }
  return v;
}

// Impurity Bloch vector of a single-qubit state.
std::array<double, 3> single_qubit_bloch(const ComplexMatrix& rho_b) {
  return {2.0 * rho_b(0, 1).real(), -2.0 * rho_b(0, 1).imag(),
          rho_b(0, 0).real() - rho_b(1, 1).real()};
}

}  // namespace

void require_unit(const BlochVector& z) {
  if (std::abs(z.norm_sq() - 1.0) > kBlochNormTol)
    throw NotNormalized("Bloch vector norm^2 = " + std::to_string(z.norm_sq()));
}

double entropy_from_eigenvalues(const RealVector& lam) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    double x = lam(i);
    if (x < -kDensityTol)
      throw InvariantViolation("entropy: eigenvalue " + std::to_string(x) + " below tolerance");
    x = std::min(std::max(x, 0.0), 1.0);
    acc -= xlogx(x);
  }
  return acc / kLn2;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_from_eigenvalues(hermitian_eigenvalues(rho.mat));
}

double mutual_information(const DensityMatrix& rho) {
  require_impurity_last(rho, "mutual_information");
  const ComplexMatrix rho_a = partial_trace(rho.mat, rho.dims, chain_factors(rho));
  const ComplexMatrix rho_b =
      partial_trace(rho.mat, rho.dims, {static_cast<int>(rho.dims.size()) - 1});
  return entropy_from_eigenvalues(hermitian_eigenvalues(rho_a)) +
         entropy_from_eigenvalues(hermitian_eigenvalues(rho_b)) - von_neumann_entropy(rho);
}

std::pair<ComplexMatrix, ComplexMatrix> measurement_projectors(const BlochVector& z) {
  require_unit(z);
  ComplexMatrix dir(2, 2);
  dir << std::complex<double>(z.z3, 0.0), std::complex<double>(z.z1, -z.z2),
      std::complex<double>(z.z1, z.z2), std::complex<double>(-z.z3, 0.0);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return {0.5 * (id + dir), 0.5 * (id - dir)};
}

MeasurementEnsemble measure_b(const DensityMatrix& rho, const BlochVector& z) {
  require_impurity_last(rho, "measure_b");
  const auto [b0, b1] = measurement_projectors(z);
  const Eigen::Index dim_a = rho.dim() / 2;
  const ComplexMatrix id_a = ComplexMatrix::Identity(dim_a, dim_a);
  const std::vector<int> keep = chain_factors(rho);
  std::vector<int> chain_dims(rho.dims.begin(), rho.dims.end() - 1);

  MeasurementEnsemble ens;
  for (int k = 0; k < 2; ++k) {
    const ComplexMatrix proj = kron(id_a, k == 0 ? b0 : b1);
    const ComplexMatrix sandwich = proj * rho.mat * proj;
    const double p = sandwich.trace().real();
    ens.p[k] = p;
    if (p > kNegligibleProbability) {
      DensityMatrix post;
      post.dims = chain_dims;
      post.mat = partial_trace(sandwich, rho.dims, keep) / p;
      ens.post_states[k] = std::move(post);
    }
  }
  return ens;
}

double conditional_entropy(const DensityMatrix& rho, const BlochVector& z) {
  require_impurity_last(rho, "conditional_entropy");
  const auto [b0, b1] = measurement_projectors(z);
  const Eigen::Index dim_a = rho.dim() / 2;
  const ComplexMatrix id_a = ComplexMatrix::Identity(dim_a, dim_a);
  const std::vector<int> keep = chain_factors(rho);

  // Work with unnormalised branch spectra: p S(rho_k) = xlogx(p) - sum xlogx(lambda),
  // which stays well conditioned when a branch probability is tiny.
  double acc = 0.0;
  for (int k = 0; k < 2; ++k) {
    const ComplexMatrix proj = kron(id_a, k == 0 ? b0 : b1);
    const ComplexMatrix sandwich = proj * rho.mat * proj;
    const ComplexMatrix reduced = partial_trace(sandwich, rho.dims, keep);
    const double p = reduced.trace().real();
    if (p <= kNegligibleProbability) continue;
    const RealVector lam = hermitian_eigenvalues(reduced);
    double branch = xlogx(p);
    for (Eigen::Index i = 0; i < lam.size(); ++i) branch -= xlogx(lam(i));
    acc += branch;
  }
  return acc / kLn2;
}

ConditionalEntropyObjective::ConditionalEntropyObjective(const DensityMatrix& rho, Path path) {
  require_impurity_last(rho, "ConditionalEntropyObjective");
  const Eigen::Index dim_a = rho.dim() / 2;

  if (path == Path::LowRank || (path == Path::Auto && dim_a >= 64)) {
    const EigenDecomposition ed = hermitian_eig(rho.mat);
    const double lam_max = ed.eigenvalues(ed.eigenvalues.size() - 1);
    const double cut = lam_max * 1e-15;
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i)
      if (ed.eigenvalues(i) > cut && ed.eigenvalues(i) > 0.0) kept.push_back(i);
    const auto r = static_cast<Eigen::Index>(kept.size());
    if (path == Path::LowRank || 2 * r <= dim_a) {
      // W = V_kept sqrt(lambda); branch spectra live in the r x r Gram
      // blocks of its impurity-even and impurity-odd rows.
      ComplexMatrix w_even(dim_a, r), w_odd(dim_a, r);
      for (Eigen::Index c = 0; c < r; ++c) {
        const double scale = std::sqrt(ed.eigenvalues(kept[c]));
        for (Eigen::Index a = 0; a < dim_a; ++a) {
          w_even(a, c) = scale * ed.eigenvectors(2 * a, kept[c]);
          w_odd(a, c) = scale * ed.eigenvectors(2 * a + 1, kept[c]);
        }
      }
      rank_ = r;
      gram_ee_.resize(r, r);
      gram_ee_.noalias() = w_even.adjoint() * w_even;
      gram_eo_.resize(r, r);
      gram_eo_.noalias() = w_even.adjoint() * w_odd;
      gram_oo_.resize(r, r);
      gram_oo_.noalias() = w_odd.adjoint() * w_odd;
      low_rank_ = true;
      return;
    }
  }

  // Impurity-index blocks R_bb'(a, a') = rho((a,b), (a,b')).
  ComplexMatrix r00(dim_a, dim_a), r01(dim_a, dim_a), r10(dim_a, dim_a), r11(dim_a, dim_a);
  for (Eigen::Index j = 0; j < dim_a; ++j)
    for (Eigen::Index i = 0; i < dim_a; ++i) {
      r00(i, j) = rho.mat(2 * i, 2 * j);
      r01(i, j) = rho.mat(2 * i, 2 * j + 1);
      r10(i, j) = rho.mat(2 * i + 1, 2 * j);
      r11(i, j) = rho.mat(2 * i + 1, 2 * j + 1);
    }
  dense_rho_a_ = r00 + r11;
  gx_ = r01 + r10;
  gy_ = kI * (r01 - r10);
  gz_ = r00 - r11;
}

double ConditionalEntropyObjective::operator()(const BlochVector& z) const {
  require_unit(z);
  double acc = 0.0;

  if (low_rank_) {
    const Eigen::Vector2cd vp = bloch_plus(z);
    const Eigen::Vector2cd vm = bloch_plus(-z);
    for (int k = 0; k < 2; ++k) {
      const Eigen::Vector2cd& v = k == 0 ? vp : vm;
      // Gram of conj(v0) W_e + conj(v1) W_o without touching the big factor
      const std::complex<double> c = v(0) * std::conj(v(1));
      ComplexMatrix gram = std::norm(v(0)) * gram_ee_ + std::norm(v(1)) * gram_oo_;
      gram += c * gram_eo_ + (c * gram_eo_).adjoint();
      const double p = gram.trace().real();
      if (p <= kNegligibleProbability) continue;
      const RealVector lam = hermitian_eigenvalues(gram);
      double branch = xlogx(p);
      for (Eigen::Index i = 0; i < lam.size(); ++i) branch -= xlogx(lam(i));
      acc += branch;
    }
    return acc / kLn2;
  }

  const ComplexMatrix m = z.z1 * gx_ + z.z2 * gy_ + z.z3 * gz_;
  for (int s = 0; s < 2; ++s) {
    const ComplexMatrix half = s == 0 ? ComplexMatrix(0.5 * (dense_rho_a_ + m))
                                      : ComplexMatrix(0.5 * (dense_rho_a_ - m));
    const double p = half.trace().real();
    if (p <= kNegligibleProbability) continue;
    const RealVector lam = hermitian_eigenvalues(half);
    double branch = xlogx(p);
    for (Eigen::Index i = 0; i < lam.size(); ++i) branch -= xlogx(lam(i));
    acc += branch;
  }
  return acc / kLn2;
}

DiscordResult compute_discord(const DensityMatrix& rho, const Minimizer& minimize) {
  require_impurity_last(rho, "compute_discord");
  const double s_total = von_neumann_entropy(rho);
  const ComplexMatrix rho_a = partial_trace(rho.mat, rho.dims, chain_factors(rho));
  const ComplexMatrix rho_b =
      partial_trace(rho.mat, rho.dims, {static_cast<int>(rho.dims.size()) - 1});
  const double s_a = entropy_from_eigenvalues(hermitian_eigenvalues(rho_a));
  const double s_b = entropy_from_eigenvalues(hermitian_eigenvalues(rho_b));

  const ConditionalEntropyObjective objective(rho);
  const Minimum best = minimize([&objective](const BlochVector& z) { return objective(z); });

  DiscordResult res;
  res.mutual_information = s_a + s_b - s_total;
  res.min_conditional_entropy = best.value;
  res.argmin = best.z;
  res.discord = res.mutual_information - (s_a - best.value);
  const auto m = single_qubit_bloch(rho_b);
  res.p0_at_argmin = 0.5 * (1.0 + best.z.z1 * m[0] + best.z.z2 * m[1] + best.z.z3 * m[2]);
  if (res.discord < -1e-8)
    throw InvariantViolation("discord " + std::to_string(res.discord) + " below -1e-8");
  return res;
}

}  // namespace discord
