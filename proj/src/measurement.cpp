#include "eup/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace eup {

namespace {

void check_finite(const Matrix& m, const std::string& where) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::ParseError, where + ": non-finite entry");
  }
}

}  // namespace

PureState PureState::from_amplitudes(Vector amplitudes) {
  if (amplitudes.size() == 0 || !amplitudes.allFinite()) {
    throw Error(ErrorCode::ParseError, "state: empty or non-finite");
  }
  double nrm = amplitudes.norm();
  if (std::abs(nrm - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotNormalized,
                "state: norm " + std::to_string(nrm));
  }
  return PureState(std::move(amplitudes));
}

MixedState MixedState::from_density(Matrix rho) {
  check_finite(rho, "density");
  if (rho.rows() != rho.cols()) {
    throw Error(ErrorCode::NonSquare, "density: not square");
  }
  if (!is_hermitian(rho, 1e-9)) {
    throw Error(ErrorCode::NotHermitian, "density: not Hermitian");
  }
  EigenDecomposition ed = eigh(rho);
  if (ed.eigenvalues(0) < -1e-10) {
    throw Error(ErrorCode::NotPsd,
                "density: eigenvalue " + std::to_string(ed.eigenvalues(0)));
  }
  double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotNormalized,
                "density: trace " + std::to_string(tr));
  }
  return MixedState(std::move(rho), std::nullopt);
}

MixedState MixedState::from_mixture(std::vector<WeightedComponent> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::ParseError, "mixture: empty");
  }
  int d = parts.front().state.dim();
  double total = 0.0;
  Matrix rho = Matrix::Zero(d, d);
  for (const auto& part : parts) {
    if (part.state.dim() != d) {
      throw Error(ErrorCode::DimensionMismatch, "mixture: component dims differ");
    }
    if (!(part.weight > 0.0)) {
      throw Error(ErrorCode::OutOfRange, "mixture: nonpositive weight");
    }
    total += part.weight;
    const Vector& psi = part.state.amplitudes();
    rho += part.weight * (psi * psi.adjoint());
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotNormalized,
                "mixture: weights sum to " + std::to_string(total));
  }
  return MixedState(std::move(rho), std::move(parts));
}

Measurement Measurement::validate(std::vector<Matrix> operators, int dim) {
  if (operators.empty()) {
    throw Error(ErrorCode::BadOutcomeCount, "measurement: no operators");
  }
  if (dim < 1) {
    throw Error(ErrorCode::OutOfRange, "measurement: dim < 1");
  }
  Matrix sum = Matrix::Zero(dim, dim);
  std::vector<Matrix> sqrts;
  std::vector<bool> zero;
  sqrts.reserve(operators.size());
  bool projective = true;
  for (size_t i = 0; i < operators.size(); ++i) {
    const Matrix& x = operators[i];
    check_finite(x, "operator " + std::to_string(i));
    if (x.rows() != dim || x.cols() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "operator " + std::to_string(i) + ": wrong shape");
    }
    if (!is_hermitian(x, 1e-9)) {
      throw Error(ErrorCode::NotHermitian,
                  "operator " + std::to_string(i) + ": not Hermitian");
    }
    EigenDecomposition ed = eigh(x);
    if (ed.eigenvalues(0) < -1e-10) {
      throw Error(ErrorCode::NotPositive,
                  "operator " + std::to_string(i) + ": eigenvalue " +
                      std::to_string(ed.eigenvalues(0)));
    }
    RealVector roots(ed.eigenvalues.size());
    for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
      roots(k) = std::sqrt(std::max(ed.eigenvalues(k), 0.0));
    }
    sqrts.push_back(ed.eigenvectors * roots.asDiagonal() *
                    ed.eigenvectors.adjoint());
    zero.push_back(ed.eigenvalues(ed.eigenvalues.size() - 1) <= 1e-12);
    sum += x;
    if (max_abs(Matrix(x * x - x)) > 1e-8) projective = false;
  }
  double completeness = max_abs(sum - Matrix(Matrix::Identity(dim, dim)));
  if (completeness > 1e-8) {
    throw Error(ErrorCode::CompletenessViolated,
                "operators sum deviates from I by " +
                    std::to_string(completeness));
  }
  return Measurement(dim, std::move(operators), std::move(sqrts),
                     std::move(zero),
                     projective ? MeasurementKind::projective
                                : MeasurementKind::povm);
}

bool is_projective(const Measurement& m) { return m.projective(); }

OutcomeDistribution make_distribution(std::vector<double> probabilities) {
  double sum = 0.0;
  for (double& p : probabilities) {
    if (p < -1e-12) {
      throw Error(ErrorCode::OutOfRange,
                  "distribution: probability " + std::to_string(p));
    }
    p = std::max(p, 0.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-8) {
    throw Error(ErrorCode::NotNormalized,
                "distribution: sums to " + std::to_string(sum));
  }
  return OutcomeDistribution{std::move(probabilities)};
}

PureState random_pure_state(int dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::OutOfRange, "random_pure_state: dim < 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector psi(dim);
  for (int k = 0; k < dim; ++k) {
    double re = gauss(rng);
    double im = gauss(rng);
    psi(k) = Complex(re, im);
  }
  double nrm = psi.norm();
  if (nrm < 1e-12) {
    // Essentially impossible; fall back to a basis vector.
    psi.setZero();
    psi(0) = 1.0;
    nrm = 1.0;
  }
  psi /= nrm;
  return PureState::from_amplitudes(std::move(psi));
}

Matrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (int c = 0; c < dim; ++c) {
    Complex diag = r(c, c);
    double mag = std::abs(diag);
    q.col(c) *= (mag > 0) ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

Measurement random_measurement(int dim, int outcomes, MeasurementKind kind,
                               std::uint64_t seed) {
  if (outcomes < 1) {
    throw Error(ErrorCode::BadOutcomeCount, "random_measurement: outcomes < 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<Matrix> ops;
  if (kind == MeasurementKind::projective) {
    if (outcomes > dim) {
      throw Error(ErrorCode::BadOutcomeCount,
                  "random_measurement: projective needs outcomes <= dim");
    }
    Matrix u = random_unitary(dim, rng);
    // Random composition of dim into `outcomes` positive parts.
    std::vector<int> cuts;
    {
      std::vector<int> interior(static_cast<size_t>(dim - 1));
      std::iota(interior.begin(), interior.end(), 1);
      for (int pick = 0; pick < outcomes - 1; ++pick) {
        std::uniform_int_distribution<size_t> idx(0, interior.size() - 1);
        size_t j = idx(rng);
        cuts.push_back(interior[j]);
        interior.erase(interior.begin() + static_cast<std::ptrdiff_t>(j));
      }
      std::sort(cuts.begin(), cuts.end());
    }
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(dim);
    for (int k = 0; k < outcomes; ++k) {
      Matrix block = u.middleCols(cuts[static_cast<size_t>(k)],
                                  cuts[static_cast<size_t>(k) + 1] -
                                      cuts[static_cast<size_t>(k)]);
      ops.push_back(block * block.adjoint());
    }
  } else {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix s = Matrix::Zero(dim, dim);
    std::vector<Matrix> raw;
    for (int k = 0; k < outcomes; ++k) {
      Matrix g(dim, dim);
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          double re = gauss(rng);
          double im = gauss(rng);
          g(r, c) = Complex(re, im);
        }
      }
      Matrix a = g * g.adjoint();
      raw.push_back(a);
      s += a;
    }
    EigenDecomposition ed = eigh(s);
    RealVector inv_roots(ed.eigenvalues.size());
    for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
      double lambda = std::max(ed.eigenvalues(k), 0.0);
      inv_roots(k) = (lambda > 1e-14) ? 1.0 / std::sqrt(lambda) : 0.0;
    }
    Matrix whitener = ed.eigenvectors * inv_roots.asDiagonal() *
                      ed.eigenvectors.adjoint();
    for (const Matrix& a : raw) {
      Matrix x = whitener * a * whitener;
      ops.push_back(0.5 * (x + x.adjoint()));
    }
  }
  return Measurement::validate(std::move(ops), dim);
}

}  // namespace eup
