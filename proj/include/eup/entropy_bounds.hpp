#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eup/measurement.hpp"

namespace eup {

OutcomeDistribution outcome_distribution(const Measurement& m,
                                         const PureState& psi);
OutcomeDistribution outcome_distribution(const Measurement& m,
                                         const MixedState& rho);

/// Shannon entropy in bits, with 0 log 0 = 0.
double entropy_bits(const OutcomeDistribution& p);

/// The matrix of inner products between the normalized projected states
/// phi_i = P_i psi / ||P_i psi|| and psi_j = Q_j psi / ||Q_j psi||, with
/// the companion coefficient vectors a_j = <psi_j|psi>, b_i = <phi_i|psi>.
/// Rows/columns whose squared projection norm is <= 1e-12 are inadmissible
/// and stored as zeros.
struct OverlapMatrix {
  Matrix t;
  double r_max = 0.0;  // max |t_ij| over admissible pairs
  Vector a;
  Vector b;
  std::vector<bool> admissible_rows;
  std::vector<bool> admissible_cols;
  int argmax_row = -1;
  int argmax_col = -1;
};

OverlapMatrix overlap_matrix(const Measurement& p, const Measurement& q,
                             const PureState& psi);

enum class Theorem { thm1, cor1, thm3, thm4, cor2, single };

const char* theorem_name(Theorem t);

struct BoundReport {
  double bound_bits = 0.0;
  Theorem theorem = Theorem::thm4;
  int argmax_i = -1;
  int argmax_j = -1;
  int admissible_pairs = 0;
  double ratio_at_argmax = 1.0;
};

/// Lower bound on H(X,psi) + H(Y,psi):
///   -2 log2 max_{i,j} |<psi|X_i Y_j|psi>| / (||X_i^{1/2}psi|| ||Y_j^{1/2}psi||)
/// over pairs whose squared denominators both exceed 1e-12. The theorem tag
/// records the projectivity of the inputs (projective/projective,
/// projective/POVM, POVM/POVM).
BoundReport bound_state_dependent(const Measurement& x, const Measurement& y,
                                  const PureState& psi);

/// State-independent bound -2 log2 max_{i,j} ||X_i^{1/2} Y_j^{1/2}||,
/// skipping zero operators.
BoundReport bound_state_independent(const Measurement& x,
                                    const Measurement& y);

/// Single-measurement bound -log2 max_{i,j} ||X_i^{1/2} X_j^{1/2}||
/// (diagonal included), skipping zero operators.
BoundReport bound_single(const Measurement& x);

struct ConcavityChain {
  double mixed_entropy_sum;       // H(X,rho) + H(Y,rho)
  double weighted_pure_sum;       // sum_i pi_i [H(X,psi_i) + H(Y,psi_i)]
  double state_independent_bound;
};

/// Evaluates the entropy-concavity chain for a mixture; requires the
/// decomposition to be present.
ConcavityChain mixed_bound_check(const Measurement& x, const Measurement& y,
                                 const MixedState& rho);

struct GapSearchResult {
  PureState state;
  double gap_bits;  // H(X,psi)+H(Y,psi) - bound_state_dependent(x,y,psi)
};

/// Derivative-free search (Nelder-Mead over real sphere coordinates, seeded
/// restarts) for the pure state minimizing the bound gap.
GapSearchResult minimize_gap(const Measurement& x, const Measurement& y,
                             int restarts, std::uint64_t seed);

}  // namespace eup
