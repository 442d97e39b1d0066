#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eup/entropy_bounds.hpp"
#include "eup/measurement.hpp"

namespace eup {

/// Finite group from the built-in catalog, stored as a multiplication table.
struct FiniteGroup {
  std::string name;  // canonical id: Z<N>, D<n>, S3, Q8
  int order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;  // table[x][y] = index of x·y
  int identity = 0;

  bool abelian() const;
};

struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<Matrix> matrices;  // one unitary per group element
};

struct IrrepTable {
  int group_order = 0;
  std::vector<Irrep> irreps;

  int max_dim() const;
};

/// Catalog: Z<N> for N <= 64, D<n> for 3 <= n <= 12, S3, Q8
/// (case-insensitive names).
FiniteGroup build_group(const std::string& name);

/// Complete set of irreducible unitary representations for a catalog group;
/// dimensions square-sum to the group order.
IrrepTable irreps(const FiniteGroup& g);

/// The two canonical rank-one projective measurements on the N-dimensional
/// group function space: the point-mass basis and the scaled
/// representation-coefficient basis. Coefficient outcomes are ordered by
/// irrep catalog order, then row-major (i, j).
std::pair<Measurement, Measurement> peter_weyl_measurements(
    const FiniteGroup& g, const IrrepTable& table);

struct FourierCoefficient {
  int irrep;
  int row;
  int col;
  Complex value;
};

struct NCFourier {
  std::vector<FourierCoefficient> coefficients;

  double total_weight() const;  // sum of |coefficient|^2, 1 by Parseval
};

/// Fourier coefficients sqrt(d/N) <pi_ij|psi> of a function on the group.
NCFourier nc_fourier(const PureState& psi, const IrrepTable& table);

/// log2 N - log2 max irrep dimension, in bits. Equals log2 N for abelian
/// groups.
double group_bound_rhs(const IrrepTable& table);

struct GroupCaseReport {
  double position_entropy;
  double fourier_entropy;
  double rhs_bits;
  double slack;  // (position + fourier) - rhs
  bool equality;
  double cross_check_diff;  // |rhs - state-independent bound from the pair|
};

/// Evaluates the two entropies against the group bound and cross-checks the
/// bound against the general state-independent machinery.
GroupCaseReport verify_group_case(const FiniteGroup& g, const IrrepTable& table,
                                  const PureState& psi);

}  // namespace eup
