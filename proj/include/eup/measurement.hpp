#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "eup/numerics.hpp"

namespace eup {

class PureState {
 public:
  /// Checks ||psi|| = 1 within 1e-9 and finiteness.
  static PureState from_amplitudes(Vector amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  explicit PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {}
  Vector amplitudes_;
};

struct WeightedComponent {
  double weight;
  PureState state;
};

class MixedState {
 public:
  static MixedState from_density(Matrix rho);
  /// Builds rho = sum pi |psi_i><psi_i| and keeps the decomposition.
  static MixedState from_mixture(std::vector<WeightedComponent> parts);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const Matrix& rho() const { return rho_; }
  const std::optional<std::vector<WeightedComponent>>& decomposition() const {
    return decomposition_;
  }

 private:
  MixedState(Matrix rho, std::optional<std::vector<WeightedComponent>> parts)
      : rho_(std::move(rho)), decomposition_(std::move(parts)) {}
  Matrix rho_;
  std::optional<std::vector<WeightedComponent>> decomposition_;
};

enum class MeasurementKind { povm, projective };

/// A validated POVM: positive operators summing to the identity. Square
/// roots of the operators are precomputed so all later bound computations
/// stay pure and lock-free.
class Measurement {
 public:
  static Measurement validate(std::vector<Matrix> operators, int dim);

  int dim() const { return dim_; }
  int outcomes() const { return static_cast<int>(ops_.size()); }
  const Matrix& op(int i) const { return ops_[static_cast<size_t>(i)]; }
  const std::vector<Matrix>& ops() const { return ops_; }
  const Matrix& sqrt_op(int i) const { return sqrts_[static_cast<size_t>(i)]; }
  MeasurementKind kind() const { return kind_; }
  bool projective() const { return kind_ == MeasurementKind::projective; }
  /// True when op(i) is numerically zero (permitted, but excluded from bounds).
  bool zero_op(int i) const { return zero_[static_cast<size_t>(i)]; }

 private:
  Measurement(int dim, std::vector<Matrix> ops, std::vector<Matrix> sqrts,
              std::vector<bool> zero, MeasurementKind kind)
      : dim_(dim),
        ops_(std::move(ops)),
        sqrts_(std::move(sqrts)),
        zero_(std::move(zero)),
        kind_(kind) {}

  int dim_;
  std::vector<Matrix> ops_;
  std::vector<Matrix> sqrts_;
  std::vector<bool> zero_;
  MeasurementKind kind_;
};

bool is_projective(const Measurement& m);

struct OutcomeDistribution {
  std::vector<double> probabilities;
};

/// Clips tiny negatives (>= -1e-12) to zero and checks the sum is 1 within 1e-8.
OutcomeDistribution make_distribution(std::vector<double> probabilities);

/// Haar-random unit vector via normalized complex Gaussians.
PureState random_pure_state(int dim, std::uint64_t seed);

Matrix random_unitary(int dim, std::mt19937_64& rng);

/// Seeded random measurement. Projective: Haar unitary columns partitioned by
/// a random composition of dim into `outcomes` nonempty parts. POVM:
/// A_i = G_i G_i† with Gaussian G_i, then X_i = S^{-1/2} A_i S^{-1/2}.
Measurement random_measurement(int dim, int outcomes, MeasurementKind kind,
                               std::uint64_t seed);

}  // namespace eup
