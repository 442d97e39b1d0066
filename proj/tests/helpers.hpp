#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "eup/measurement.hpp"

namespace eup::testing {

inline Measurement computational_basis(int d) {
  std::vector<Matrix> ops;
  for (int k = 0; k < d; ++k) {
    Matrix p = Matrix::Zero(d, d);
    p(k, k) = 1.0;
    ops.push_back(p);
  }
  return Measurement::validate(std::move(ops), d);
}

inline Measurement hadamard_basis() {
  Vector plus(2), minus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  std::vector<Matrix> ops{plus * plus.adjoint(), minus * minus.adjoint()};
  return Measurement::validate(std::move(ops), 2);
}

inline Measurement trine_povm() {
  std::vector<Matrix> ops;
  for (int k = 0; k < 3; ++k) {
    double angle = 2.0 * std::numbers::pi * k / 3.0;
    Vector v(2);
    v << std::cos(angle), std::sin(angle);
    ops.push_back((2.0 / 3.0) * (v * v.adjoint()));
  }
  return Measurement::validate(std::move(ops), 2);
}

inline Measurement uniform_coin(int d) {
  std::vector<Matrix> ops{0.5 * Matrix::Identity(d, d),
                          0.5 * Matrix::Identity(d, d)};
  return Measurement::validate(std::move(ops), d);
}

inline PureState basis_state(int d, int k) {
  Vector v = Vector::Zero(d);
  v(k) = 1.0;
  return PureState::from_amplitudes(std::move(v));
}

}  // namespace eup::testing
