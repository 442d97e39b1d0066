#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "eup/entropy_bounds.hpp"
#include "eup/measurement.hpp"

using namespace eup;

namespace {

Measurement computational_basis(int d) {
  std::vector<Matrix> ops;
  for (int k = 0; k < d; ++k) {
    Matrix p = Matrix::Zero(d, d);
    p(k, k) = 1.0;
    ops.push_back(p);
  }
  return Measurement::validate(std::move(ops), d);
}

Measurement trine_povm() {
  std::vector<Matrix> ops;
  for (int k = 0; k < 3; ++k) {
    double angle = 2.0 * std::numbers::pi * k / 3.0;
    Vector v(2);
    v << std::cos(angle), std::sin(angle);
    ops.push_back((2.0 / 3.0) * (v * v.adjoint()));
  }
  return Measurement::validate(std::move(ops), 2);
}

}  // namespace

TEST_CASE("validate detects kind") {
  Measurement comp = computational_basis(2);
  CHECK(comp.projective());
  CHECK(is_projective(comp));

  std::vector<Matrix> halves{0.5 * Matrix::Identity(2, 2),
                             0.5 * Matrix::Identity(2, 2)};
  Measurement coin = Measurement::validate(halves, 2);
  CHECK_FALSE(coin.projective());

  CHECK_FALSE(trine_povm().projective());  // (2/3)^2 != 2/3
}

TEST_CASE("validate rejects bad input") {
  std::vector<Matrix> twice{Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  try {
    Measurement::validate(twice, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompletenessViolated);
  }

  Matrix nh(2, 2);
  nh << 0.0, 1.0, 0.0, 1.0;
  std::vector<Matrix> bad{nh, Matrix::Identity(2, 2) - nh};
  CHECK_THROWS_AS(static_cast<void>(Measurement::validate(bad, 2)), Error);

  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = -0.5;
  neg(1, 1) = 1.5;
  std::vector<Matrix> indef{neg, Matrix::Identity(2, 2) - neg};
  try {
    Measurement::validate(indef, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositive);
  }
}

TEST_CASE("pure state normalization") {
  Vector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(static_cast<void>(PureState::from_amplitudes(v)), Error);
  v << 1.0, 0.0;
  CHECK(PureState::from_amplitudes(v).dim() == 2);
}

TEST_CASE("random_pure_state contracts") {
  PureState one = random_pure_state(1, 5);
  CHECK(std::abs(std::abs(one.amplitudes()(0)) - 1.0) < 1e-12);

  for (std::uint64_t seed : {0ull, 1ull, 42ull, 123456789ull}) {
    PureState psi = random_pure_state(6, seed);
    CHECK(std::abs(psi.amplitudes().norm() - 1.0) < 1e-12);
    PureState again = random_pure_state(6, seed);
    CHECK(psi.amplitudes() == again.amplitudes());
  }
}

TEST_CASE("random projective measurements") {
  Measurement m = random_measurement(2, 2, MeasurementKind::projective, 3);
  CHECK(m.projective());
  for (int i = 0; i < 2; ++i) {
    CHECK(m.op(i).trace().real() == doctest::Approx(1.0));  // rank one each
  }

  // dim 3 into 2 outcomes: ranks must be {1, 2}
  Measurement m32 = random_measurement(3, 2, MeasurementKind::projective, 9);
  std::vector<int> ranks;
  for (int i = 0; i < 2; ++i) {
    ranks.push_back(static_cast<int>(std::lround(m32.op(i).trace().real())));
  }
  std::sort(ranks.begin(), ranks.end());
  CHECK(ranks == std::vector<int>{1, 2});

  CHECK_THROWS_AS(
      static_cast<void>(random_measurement(2, 3, MeasurementKind::projective, 1)),
      Error);
}

TEST_CASE("random povm has requested outcomes and completeness") {
  Measurement m = random_measurement(2, 3, MeasurementKind::povm, 7);
  CHECK(m.outcomes() == 3);
  Matrix sum = Matrix::Zero(2, 2);
  for (int i = 0; i < 3; ++i) sum += m.op(i);
  CHECK(max_abs(sum - Matrix(Matrix::Identity(2, 2))) < 1e-8);
}

TEST_CASE("completeness holds across many seeded draws") {
  int draws = 0;
  for (int d : {2, 3, 4}) {
    for (int outcomes : {2, 3, 5}) {
      for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Measurement m = random_measurement(d, outcomes, MeasurementKind::povm,
                                           seed * 1000 + static_cast<std::uint64_t>(d));
        Matrix sum = Matrix::Zero(d, d);
        for (int i = 0; i < m.outcomes(); ++i) sum += m.op(i);
        CHECK(max_abs(sum - Matrix(Matrix::Identity(d, d))) < 1e-8);
        ++draws;
        if (outcomes <= d) {
          Measurement p = random_measurement(d, outcomes,
                                             MeasurementKind::projective,
                                             seed * 977 + static_cast<std::uint64_t>(d));
          sum = Matrix::Zero(d, d);
          for (int i = 0; i < p.outcomes(); ++i) sum += p.op(i);
          CHECK(max_abs(sum - Matrix(Matrix::Identity(d, d))) < 1e-8);
          // mutual orthogonality of projector pairs
          for (int i = 0; i < p.outcomes(); ++i) {
            for (int j = 0; j < p.outcomes(); ++j) {
              Matrix expect = (i == j) ? p.op(j) : Matrix(Matrix::Zero(d, d));
              CHECK(max_abs(Matrix(p.op(i) * p.op(j)) - expect) < 1e-7);
            }
          }
          ++draws;
        }
      }
    }
  }
  CHECK(draws >= 1000);
}

TEST_CASE("outcome distribution sums to one") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Measurement m = random_measurement(3, 4, MeasurementKind::povm, seed);
    PureState psi = random_pure_state(3, seed + 999);
    OutcomeDistribution dist = outcome_distribution(m, psi);
    double sum = 0.0;
    for (double p : dist.probabilities) sum += p;
    CHECK(std::abs(sum - 1.0) < 1e-8);
  }
}

TEST_CASE("mixture statistics match weighted pure statistics") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<WeightedComponent> parts;
    parts.push_back({0.2, random_pure_state(3, seed * 10 + 1)});
    parts.push_back({0.5, random_pure_state(3, seed * 10 + 2)});
    parts.push_back({0.3, random_pure_state(3, seed * 10 + 3)});
    MixedState rho = MixedState::from_mixture(parts);
    CHECK(std::abs(rho.rho().trace().real() - 1.0) < 1e-9);

    Measurement m = random_measurement(3, 3, MeasurementKind::povm, seed + 77);
    OutcomeDistribution mixed = outcome_distribution(m, rho);
    for (int k = 0; k < m.outcomes(); ++k) {
      double weighted = 0.0;
      for (const auto& part : parts) {
        weighted += part.weight *
                    outcome_distribution(m, part.state).probabilities[static_cast<size_t>(k)];
      }
      CHECK(std::abs(mixed.probabilities[static_cast<size_t>(k)] - weighted) < 1e-8);
    }
  }
}

TEST_CASE("mixed state validation") {
  Matrix not_unit_trace = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(static_cast<void>(MixedState::from_density(not_unit_trace)),
                  Error);
  CHECK(MixedState::from_density(0.5 * Matrix::Identity(2, 2)).dim() == 2);
}
