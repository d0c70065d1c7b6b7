#include "discord/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace discord {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
}

void require_hermitian(const ComplexMatrix& h, const char* who) {
  require_square(h, who);
  const double err = hermiticity_error(h);
  if (!(err <= kHermitianTol))
    throw NotHermitian(std::string(who) + ": symmetry error " + std::to_string(err));
}

// zheevd on a copy of h; jobz is 'N' or 'V'.
void zheevd(ComplexMatrix& a, RealVector& w, char jobz) {
  const auto n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, jobz, 'L', n, a.data(), n, w.data());
  if (info != 0)
    throw InvariantViolation("zheevd failed with info=" + std::to_string(info));
}

}  // namespace

double hermiticity_error(const ComplexMatrix& m) {
  double err = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i <= j && i < m.rows(); ++i)
      err = std::max(err, std::abs(m(i, j) - std::conj(m(j, i))));
  return err;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& h) {
  require_hermitian(h, "hermitian_eig");
  EigenDecomposition d;
  // Small problems go through Eigen; the LAPACK call overhead dominates there.
  if (h.rows() <= 64) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
      throw InvariantViolation("hermitian_eig: eigensolver did not converge");
    d.eigenvalues = es.eigenvalues();
    d.eigenvectors = es.eigenvectors();
    return d;
  }
  ComplexMatrix a = h;
  zheevd(a, d.eigenvalues, 'V');
  d.eigenvectors = std::move(a);
  return d;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
  require_hermitian(h, "hermitian_eigenvalues");
  if (h.rows() <= 64) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw InvariantViolation("hermitian_eigenvalues: eigensolver did not converge");
    return es.eigenvalues();
  }
  ComplexMatrix a = h;
  RealVector w;
  zheevd(a, w, 'N');
  return w;
}

ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double theta) {
  return unitary_from_hermitian(hermitian_eig(h), theta);
}

ComplexMatrix unitary_from_hermitian(const EigenDecomposition& hd, double theta) {
  const Eigen::Index n = hd.eigenvectors.rows();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double arg = -theta * hd.eigenvalues(k);
    phases(k) = std::complex<double>(std::cos(arg), std::sin(arg));
  }
  ComplexMatrix scaled = hd.eigenvectors * phases.asDiagonal();
  ComplexMatrix u(n, n);
  u.noalias() = scaled * hd.eigenvectors.adjoint();
  return u;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep_arg) {
  require_square(rho, "partial_trace");
  const int nf = static_cast<int>(dims.size());
  std::int64_t total = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionMismatch("partial_trace: factor dimension < 1");
    total *= d;
  }
  if (total != rho.rows())
    throw DimensionMismatch("partial_trace: factor dims multiply to " + std::to_string(total) +
                            ", matrix is " + std::to_string(rho.rows()));

  std::vector<int> keep = keep_arg;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw DimensionMismatch("partial_trace: keep set is empty");
  for (int f : keep)
    if (f < 0 || f >= nf) throw DimensionMismatch("partial_trace: keep index out of range");

  std::vector<int> traced;
  for (int f = 0; f < nf; ++f)
    if (!std::binary_search(keep.begin(), keep.end(), f)) traced.push_back(f);

  // Row strides of each factor in the composite index (factor 0 slowest).
  std::vector<std::int64_t> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  // Composite offsets of every kept / traced multi-index.
  auto offsets = [&](const std::vector<int>& factors) {
    std::int64_t count = 1;
    for (int f : factors) count *= dims[f];
    std::vector<std::int64_t> off(static_cast<std::size_t>(count), 0);
    std::int64_t repeat = 1;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const int f = *it;
      for (std::int64_t i = 0; i < count; ++i) {
        const std::int64_t digit = (i / repeat) % dims[f];
        off[static_cast<std::size_t>(i)] += digit * stride[f];
      }
      repeat *= dims[f];
    }
    return off;
  };
  const std::vector<std::int64_t> keep_off = offsets(keep);
  const std::vector<std::int64_t> traced_off =
      traced.empty() ? std::vector<std::int64_t>{0} : offsets(traced);

  const auto nk = static_cast<Eigen::Index>(keep_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(nk, nk);
  for (Eigen::Index j = 0; j < nk; ++j)
    for (Eigen::Index i = 0; i < nk; ++i) {
      std::complex<double> s(0.0, 0.0);
      for (std::int64_t t : traced_off) s += rho(keep_off[i] + t, keep_off[j] + t);
      out(i, j) = s;
    }
  return out;
}

}  // namespace discord
