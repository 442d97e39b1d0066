#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eup/measurement.hpp"
#include "eup/numerics.hpp"

using namespace eup;

namespace {

Matrix random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("eigh identity and diagonal") {
  EigenDecomposition ed = eigh(Matrix::Identity(2, 2));
  CHECK(ed.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ed.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs(Matrix(ed.eigenvectors.adjoint() * ed.eigenvectors) -
                Matrix(Matrix::Identity(2, 2))) < 1e-10);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  ed = eigh(d);
  CHECK(ed.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(ed.eigenvalues(1) == doctest::Approx(3.0));
}

TEST_CASE("eigh Pauli-X") {
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  EigenDecomposition ed = eigh(x);
  CHECK(ed.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(ed.eigenvalues(1) == doctest::Approx(1.0));
  Vector minus(2), plus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(minus.dot(ed.eigenvectors.col(0))) == doctest::Approx(1.0));
  CHECK(std::abs(plus.dot(ed.eigenvectors.col(1))) == doctest::Approx(1.0));
}

TEST_CASE("eigh rejects bad input") {
  CHECK_THROWS_AS(eigh(Matrix::Zero(2, 3)), Error);
  Matrix skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(eigh(skew), Error);
}

TEST_CASE("eigh reconstruction on random Hermitian") {
  std::mt19937_64 rng(11);
  for (int d : {2, 3, 5, 8}) {
    for (int rep = 0; rep < 20; ++rep) {
      Matrix a = random_hermitian(d, rng);
      EigenDecomposition ed = eigh(a);
      for (Eigen::Index k = 0; k + 1 < ed.eigenvalues.size(); ++k) {
        CHECK(ed.eigenvalues(k) <= ed.eigenvalues(k + 1));
      }
      Matrix rebuilt = ed.eigenvectors *
                       ed.eigenvalues.cast<Complex>().asDiagonal() *
                       ed.eigenvectors.adjoint();
      CHECK(max_abs(rebuilt - a) < 1e-9);
      for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
        Vector residual =
            a * ed.eigenvectors.col(k) - ed.eigenvalues(k) * ed.eigenvectors.col(k);
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-9);
      }
    }
  }
}

TEST_CASE("matrix_sqrt basic cases") {
  CHECK(max_abs(matrix_sqrt(Matrix::Identity(3, 3)) -
                Matrix(Matrix::Identity(3, 3))) < 1e-12);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  Matrix s = matrix_sqrt(d);
  CHECK(std::abs(s(0, 0) - Complex(2.0)) < 1e-12);
  CHECK(std::abs(s(1, 1) - Complex(3.0)) < 1e-12);

  // sqrt of c*P is sqrt(c)*P for a projector P
  Matrix p(2, 2);
  p << 0.5, 0.5, 0.5, 0.5;
  Matrix half_p = 0.5 * p;
  Matrix root = matrix_sqrt(half_p);
  CHECK(max_abs(root - Matrix(p / std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("matrix_sqrt rejects indefinite input") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -0.5;
  CHECK_THROWS_AS(matrix_sqrt(d), Error);
}

TEST_CASE("matrix_sqrt squares back on random PSD") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int d : {2, 4, 8}) {
    for (int rep = 0; rep < 20; ++rep) {
      Matrix g(d, d);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          double re = gauss(rng);
          double im = gauss(rng);
          g(r, c) = Complex(re, im);
        }
      }
      Matrix a = g.adjoint() * g;
      Matrix s = matrix_sqrt(a);
      CHECK(is_hermitian(s, 1e-9));
      CHECK(max_abs(Matrix(s * s) - a) < 1e-8);
    }
  }
}

TEST_CASE("spectral_norm basic") {
  CHECK(spectral_norm(Matrix::Zero(3, 3)) == 0.0);
  std::mt19937_64 rng(23);
  Matrix u = random_unitary(4, rng);
  CHECK(spectral_norm(u) == doctest::Approx(1.0).epsilon(1e-10));

  // |0><0| times the Hadamard-basis projector |+><+|
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Matrix pplus(2, 2);
  pplus << 0.5, 0.5, 0.5, 0.5;
  CHECK(spectral_norm(p0 * pplus) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("spectral_norm invariances") {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix a(4, 4);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        double re = gauss(rng);
        double im = gauss(rng);
        a(r, c) = Complex(re, im);
      }
    }
    double base = spectral_norm(a);
    CHECK(std::abs(spectral_norm(a.adjoint()) - base) < 1e-9);
    Matrix u = random_unitary(4, rng);
    Matrix v = random_unitary(4, rng);
    CHECK(std::abs(spectral_norm(u * a * v) - base) < 1e-9);
  }
}

TEST_CASE("complete_isometry identity and 2x1") {
  Matrix id = Matrix::Identity(3, 3);
  CHECK(max_abs(complete_isometry(id) - id) == 0.0);

  Matrix w(2, 1);
  w << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Matrix u = complete_isometry(w);
  CHECK(u.col(0) == w.col(0));
  CHECK(max_abs(Matrix(u.adjoint() * u) - Matrix(Matrix::Identity(2, 2))) < 1e-9);
  // second column is (1, -1)/sqrt2 up to phase
  Vector expect(2);
  expect << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(std::abs(expect.dot(u.col(1))) == doctest::Approx(1.0));
}

TEST_CASE("complete_isometry preserves input columns bit-for-bit") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix u0 = random_unitary(4, rng);
    Matrix w = u0.leftCols(1);
    Matrix u = complete_isometry(w);
    CHECK(u.col(0) == w.col(0));
    CHECK(max_abs(Matrix(u.adjoint() * u) - Matrix(Matrix::Identity(4, 4))) < 1e-9);
  }
}

TEST_CASE("complete_isometry rejects non-isometries") {
  Matrix w(2, 1);
  w << 1.0, 1.0;
  CHECK_THROWS_AS(complete_isometry(w), Error);
  CHECK_THROWS_AS(complete_isometry(Matrix::Identity(2, 3)), Error);
}
