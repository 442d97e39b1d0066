#include "eup/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eup {

double max_abs(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

EigenDecomposition eigh(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NonSquare,
                "eigh: matrix is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
  double asym = max_abs(a - a.adjoint());
  if (asym > 1e-9) {
    throw Error(ErrorCode::NotHermitian,
                "eigh: max asymmetry " + std::to_string(asym));
  }
  // Symmetrize so roundoff in the input cannot leak into the solver.
  Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::Internal, "eigh: solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_sqrt(const Matrix& a) {
  EigenDecomposition ed = eigh(a);
  RealVector roots(ed.eigenvalues.size());
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    double lambda = ed.eigenvalues(k);
    if (lambda < -1e-10) {
      throw Error(ErrorCode::NotPsd,
                  "matrix_sqrt: eigenvalue " + std::to_string(lambda));
    }
    roots(k) = std::sqrt(std::max(lambda, 0.0));
  }
  return ed.eigenvectors * roots.asDiagonal() *
         ed.eigenvectors.adjoint();
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Matrix gram = a.adjoint() * a;
  EigenDecomposition ed = eigh(gram);
  double top = ed.eigenvalues(ed.eigenvalues.size() - 1);
  return std::sqrt(std::max(top, 0.0));
}

Matrix complete_isometry(const Matrix& w) {
  const Eigen::Index rows = w.rows();
  const Eigen::Index cols = w.cols();
  if (rows < cols) {
    throw Error(ErrorCode::NotIsometry, "complete_isometry: rows < cols");
  }
  double dev = max_abs(Matrix(w.adjoint() * w) -
                       Matrix(Matrix::Identity(cols, cols)));
  if (dev > 1e-9) {
    throw Error(ErrorCode::NotIsometry,
                "complete_isometry: w†w deviates from I by " +
                    std::to_string(dev));
  }

  Matrix u(rows, rows);
  u.leftCols(cols) = w;
  Eigen::Index filled = cols;
  for (Eigen::Index k = 0; k < rows && filled < rows; ++k) {
    Vector v = Vector::Zero(rows);
    v(k) = 1.0;
    // Two Gram-Schmidt passes keep the residual orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      v -= u.leftCols(filled) * (u.leftCols(filled).adjoint() * v);
    }
    double nrm = v.norm();
    if (nrm < 1e-8) continue;
    u.col(filled++) = v / nrm;
  }
  if (filled != rows) {
    throw Error(ErrorCode::Internal,
                "complete_isometry: basis completion fell short");
  }
  return u;
}

}  // namespace eup
