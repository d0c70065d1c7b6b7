#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "discord/errors.hpp"

namespace discord {

using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Admission tolerance for "this matrix is Hermitian" (max |h - h^dag| per entry).
inline constexpr double kHermitianTol = 1e-10;
// Unitarity / spectral-reconstruction tolerance.
inline constexpr double kUnitaryTol = 1e-9;

// max_ij |m(i,j) - conj(m(j,i))|
double hermiticity_error(const ComplexMatrix& m);

struct EigenDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, same order
};

// Kronecker product, a's index slow: result((i*br+k),(j*bc+l)) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Full spectral decomposition of a Hermitian matrix. Throws NotHermitian
// if the symmetry error exceeds kHermitianTol.
EigenDecomposition hermitian_eig(const ComplexMatrix& h);

// Eigenvalues only (ascending); cheaper than hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& h);

// exp(-i * theta * h) through the spectral decomposition of h.
ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double theta);
ComplexMatrix unitary_from_hermitian(const EigenDecomposition& hd, double theta);

// Trace out every tensor factor not listed in `keep`. `dims` are the factor
// dimensions, factor 0 being the leftmost (slowest) Kronecker index. Kept
// factors retain their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

}  // namespace discord
