#include "eup/naimark.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace eup {

NaimarkDilation dilate(const Measurement& y) {
  const int d = y.dim();
  const int n = y.outcomes();
  const int ambient = d * n;

  Matrix w(ambient, d);
  for (int j = 0; j < n; ++j) {
    w.middleRows(j * d, d) = y.sqrt_op(j);
  }
  // W is an isometry because the square roots square-sum to the identity.
  Matrix u = complete_isometry(w);

  std::vector<Matrix> projectors;
  projectors.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Matrix block = u.middleRows(j * d, d);  // rows of U in the j-th slot
    Matrix q = block.adjoint() * block;     // = U† E_j U
    projectors.push_back(0.5 * (q + q.adjoint()));
  }
  Measurement proj = Measurement::validate(std::move(projectors), ambient);
  if (!proj.projective()) {
    throw Error(ErrorCode::Internal, "dilate: projector axioms failed");
  }
  return NaimarkDilation{y, ambient, std::move(proj), std::move(u)};
}

Measurement extend_measurement(const Measurement& x, int ambient_dim) {
  const int d = x.dim();
  if (ambient_dim < d) {
    throw Error(ErrorCode::BadAmbientDim,
                "extend_measurement: ambient " + std::to_string(ambient_dim) +
                    " < dim " + std::to_string(d));
  }
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(x.outcomes()));
  for (int i = 0; i < x.outcomes(); ++i) {
    Matrix padded = Matrix::Zero(ambient_dim, ambient_dim);
    padded.topLeftCorner(d, d) = x.op(i);
    if (i == 0 && ambient_dim > d) {
      padded.bottomRightCorner(ambient_dim - d, ambient_dim - d) =
          Matrix::Identity(ambient_dim - d, ambient_dim - d);
    }
    ops.push_back(std::move(padded));
  }
  return Measurement::validate(std::move(ops), ambient_dim);
}

PureState embed_state(const PureState& psi, int ambient_dim) {
  if (ambient_dim < psi.dim()) {
    throw Error(ErrorCode::BadAmbientDim, "embed_state: ambient < dim");
  }
  Vector padded = Vector::Zero(ambient_dim);
  padded.head(psi.dim()) = psi.amplitudes();
  return PureState::from_amplitudes(std::move(padded));
}

DilationCheck verify_dilation(const NaimarkDilation& dilation, int trials,
                              std::uint64_t seed) {
  const Measurement& y = dilation.original;
  const int d = y.dim();
  DilationCheck check;
  check.trials = trials;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> outcome_count(1, d);
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t trial_seed = seed + 1 + static_cast<std::uint64_t>(trial);
    PureState psi = random_pure_state(d, trial_seed);
    Measurement partner = random_measurement(
        d, outcome_count(rng), MeasurementKind::projective, trial_seed ^ 0x9e3779b9ull);

    PureState embedded = embed_state(psi, dilation.ambient_dim);
    Measurement extended = extend_measurement(partner, dilation.ambient_dim);

    double direct = bound_state_dependent(partner, y, psi).bound_bits;
    double lifted =
        bound_state_dependent(extended, dilation.projectors, embedded).bound_bits;
    check.max_bound_mismatch =
        std::max(check.max_bound_mismatch, std::abs(direct - lifted));

    OutcomeDistribution base = outcome_distribution(y, psi);
    OutcomeDistribution ambient =
        outcome_distribution(dilation.projectors, embedded);
    for (size_t j = 0; j < base.probabilities.size(); ++j) {
      check.max_probability_mismatch =
          std::max(check.max_probability_mismatch,
                   std::abs(base.probabilities[j] - ambient.probabilities[j]));
    }
    double entropy_direct = entropy_bits(outcome_distribution(partner, psi)) +
                            entropy_bits(base);
    double entropy_lifted =
        entropy_bits(outcome_distribution(extended, embedded)) +
        entropy_bits(ambient);
    check.max_entropy_mismatch = std::max(
        check.max_entropy_mismatch, std::abs(entropy_direct - entropy_lifted));
  }
  return check;
}

}  // namespace eup
