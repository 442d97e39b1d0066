#pragma once

#include <Eigen/Dense>
#include <complex>

#include "eup/error.hpp"

namespace eup {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest entry modulus; 0 for an empty matrix.
double max_abs(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol = 1e-9);

struct EigenDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, eigenvectors.col(k) <-> eigenvalues(k)
};

/// Eigendecomposition of a Hermitian matrix. Rejects non-square input and
/// matrices whose max asymmetry |a - a†| exceeds 1e-9.
EigenDecomposition eigh(const Matrix& a);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clipped to 0;
/// anything below -1e-10 is rejected as NotPsd.
Matrix matrix_sqrt(const Matrix& a);

/// Largest singular value, computed as sqrt of the top eigenvalue of a†a.
double spectral_norm(const Matrix& a);

/// Extends a matrix with orthonormal columns (rows >= cols, w†w = I within
/// 1e-9) to a square unitary whose leading columns equal w exactly. The
/// remaining columns come from orthonormalizing standard basis residuals,
/// dropping residuals of norm < 1e-8, so the result is deterministic.
Matrix complete_isometry(const Matrix& w);

}  // namespace eup
