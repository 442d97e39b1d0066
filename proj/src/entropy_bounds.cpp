#include "eup/entropy_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace eup {

namespace {

void check_dims(int a, int b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(where) + ": dims " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

constexpr double kAdmissible = 1e-12;

}  // namespace

OutcomeDistribution outcome_distribution(const Measurement& m,
                                         const PureState& psi) {
  check_dims(m.dim(), psi.dim(), "outcome_distribution");
  std::vector<double> p;
  p.reserve(static_cast<size_t>(m.outcomes()));
  const Vector& v = psi.amplitudes();
  for (int i = 0; i < m.outcomes(); ++i) {
    double prob = (v.adjoint() * m.op(i) * v).value().real();
    p.push_back(std::clamp(prob, 0.0, 1.0));
  }
  return make_distribution(std::move(p));
}

OutcomeDistribution outcome_distribution(const Measurement& m,
                                         const MixedState& rho) {
  check_dims(m.dim(), rho.dim(), "outcome_distribution");
  std::vector<double> p;
  p.reserve(static_cast<size_t>(m.outcomes()));
  for (int i = 0; i < m.outcomes(); ++i) {
    double prob = (rho.rho() * m.op(i)).trace().real();
    p.push_back(std::clamp(prob, 0.0, 1.0));
  }
  return make_distribution(std::move(p));
}

double entropy_bits(const OutcomeDistribution& p) {
  double h = 0.0;
  for (double pi : p.probabilities) {
    if (pi > 0.0) h -= pi * std::log2(pi);
  }
  return std::max(h, 0.0);
}

OverlapMatrix overlap_matrix(const Measurement& p, const Measurement& q,
                             const PureState& psi) {
  if (!p.projective() || !q.projective()) {
    throw Error(ErrorCode::NotProjective,
                "overlap_matrix: both measurements must be projective");
  }
  check_dims(p.dim(), q.dim(), "overlap_matrix");
  check_dims(p.dim(), psi.dim(), "overlap_matrix");

  const int m = p.outcomes();
  const int n = q.outcomes();
  const Vector& v = psi.amplitudes();

  std::vector<Vector> phi(static_cast<size_t>(m));
  std::vector<Vector> chi(static_cast<size_t>(n));
  OverlapMatrix out;
  out.t = Matrix::Zero(m, n);
  out.a = Vector::Zero(n);
  out.b = Vector::Zero(m);
  out.admissible_rows.assign(static_cast<size_t>(m), false);
  out.admissible_cols.assign(static_cast<size_t>(n), false);

  int live_rows = 0;
  int live_cols = 0;
  for (int i = 0; i < m; ++i) {
    Vector proj = p.op(i) * v;
    double n2 = proj.squaredNorm();
    if (n2 > kAdmissible) {
      phi[static_cast<size_t>(i)] = proj / std::sqrt(n2);
      out.admissible_rows[static_cast<size_t>(i)] = true;
      out.b(i) = phi[static_cast<size_t>(i)].dot(v);
      ++live_rows;
    }
  }
  for (int j = 0; j < n; ++j) {
    Vector proj = q.op(j) * v;
    double n2 = proj.squaredNorm();
    if (n2 > kAdmissible) {
      chi[static_cast<size_t>(j)] = proj / std::sqrt(n2);
      out.admissible_cols[static_cast<size_t>(j)] = true;
      out.a(j) = chi[static_cast<size_t>(j)].dot(v);
      ++live_cols;
    }
  }
  if (live_rows == 0 || live_cols == 0) {
    throw Error(ErrorCode::AllOutcomesNull,
                "overlap_matrix: no admissible outcomes");
  }
  for (int i = 0; i < m; ++i) {
    if (!out.admissible_rows[static_cast<size_t>(i)]) continue;
    for (int j = 0; j < n; ++j) {
      if (!out.admissible_cols[static_cast<size_t>(j)]) continue;
      Complex tij = phi[static_cast<size_t>(i)].dot(chi[static_cast<size_t>(j)]);
      out.t(i, j) = tij;
      double mag = std::abs(tij);
      if (mag > out.r_max) {
        out.r_max = mag;
        out.argmax_row = i;
        out.argmax_col = j;
      }
    }
  }
  if (!(out.r_max > 0.0)) {
    throw Error(ErrorCode::Internal, "overlap_matrix: vanishing max overlap");
  }
  return out;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::thm1: return "thm1";
    case Theorem::cor1: return "cor1";
    case Theorem::thm3: return "thm3";
    case Theorem::thm4: return "thm4";
    case Theorem::cor2: return "cor2";
    case Theorem::single: return "single";
  }
  return "?";
}

BoundReport bound_state_dependent(const Measurement& x, const Measurement& y,
                                  const PureState& psi) {
  check_dims(x.dim(), y.dim(), "bound_state_dependent");
  check_dims(x.dim(), psi.dim(), "bound_state_dependent");
  const Vector& v = psi.amplitudes();

  std::vector<double> dx(static_cast<size_t>(x.outcomes()));
  std::vector<double> dy(static_cast<size_t>(y.outcomes()));
  std::vector<Vector> xv(static_cast<size_t>(x.outcomes()));
  for (int i = 0; i < x.outcomes(); ++i) {
    xv[static_cast<size_t>(i)] = x.op(i) * v;
    dx[static_cast<size_t>(i)] =
        std::max(v.dot(xv[static_cast<size_t>(i)]).real(), 0.0);
  }
  std::vector<Vector> yv(static_cast<size_t>(y.outcomes()));
  for (int j = 0; j < y.outcomes(); ++j) {
    yv[static_cast<size_t>(j)] = y.op(j) * v;
    dy[static_cast<size_t>(j)] =
        std::max(v.dot(yv[static_cast<size_t>(j)]).real(), 0.0);
  }

  BoundReport report;
  report.theorem = (x.projective() && y.projective()) ? Theorem::thm1
                   : (x.projective() || y.projective()) ? Theorem::thm3
                                                        : Theorem::thm4;
  double best = 0.0;
  for (int i = 0; i < x.outcomes(); ++i) {
    if (dx[static_cast<size_t>(i)] <= kAdmissible) continue;
    for (int j = 0; j < y.outcomes(); ++j) {
      if (dy[static_cast<size_t>(j)] <= kAdmissible) continue;
      ++report.admissible_pairs;
      double num = std::abs(xv[static_cast<size_t>(i)].dot(yv[static_cast<size_t>(j)]));
      double ratio = num / std::sqrt(dx[static_cast<size_t>(i)] *
                                     dy[static_cast<size_t>(j)]);
      if (ratio > best) {
        best = ratio;
        report.argmax_i = i;
        report.argmax_j = j;
      }
    }
  }
  if (!(best > 0.0)) {
    throw Error(ErrorCode::Internal,
                "bound_state_dependent: zero max ratio over admissible pairs");
  }
  report.ratio_at_argmax = best;
  report.bound_bits = -2.0 * std::log2(best);
  return report;
}

BoundReport bound_state_independent(const Measurement& x,
                                    const Measurement& y) {
  check_dims(x.dim(), y.dim(), "bound_state_independent");
  BoundReport report;
  report.theorem =
      (x.projective() && y.projective()) ? Theorem::cor1 : Theorem::cor2;
  double best = 0.0;
  for (int i = 0; i < x.outcomes(); ++i) {
    if (x.zero_op(i)) continue;
    for (int j = 0; j < y.outcomes(); ++j) {
      if (y.zero_op(j)) continue;
      ++report.admissible_pairs;
      double nrm = spectral_norm(x.sqrt_op(i) * y.sqrt_op(j));
      if (nrm > best) {
        best = nrm;
        report.argmax_i = i;
        report.argmax_j = j;
      }
    }
  }
  if (!(best > 0.0)) {
    throw Error(ErrorCode::Internal, "bound_state_independent: zero max norm");
  }
  report.ratio_at_argmax = best;
  report.bound_bits = -2.0 * std::log2(best);
  return report;
}

BoundReport bound_single(const Measurement& x) {
  BoundReport report;
  report.theorem = Theorem::single;
  double best = 0.0;
  for (int i = 0; i < x.outcomes(); ++i) {
    if (x.zero_op(i)) continue;
    for (int j = 0; j < x.outcomes(); ++j) {
      if (x.zero_op(j)) continue;
      ++report.admissible_pairs;
      double nrm = spectral_norm(x.sqrt_op(i) * x.sqrt_op(j));
      if (nrm > best) {
        best = nrm;
        report.argmax_i = i;
        report.argmax_j = j;
      }
    }
  }
  if (!(best > 0.0)) {
    throw Error(ErrorCode::Internal, "bound_single: zero max norm");
  }
  report.ratio_at_argmax = best;
  report.bound_bits = -std::log2(best);
  return report;
}

ConcavityChain mixed_bound_check(const Measurement& x, const Measurement& y,
                                 const MixedState& rho) {
  if (!rho.decomposition()) {
    throw Error(ErrorCode::DecompositionMissing,
                "mixed_bound_check: mixture decomposition required");
  }
  ConcavityChain chain{};
  chain.mixed_entropy_sum = entropy_bits(outcome_distribution(x, rho)) +
                            entropy_bits(outcome_distribution(y, rho));
  chain.weighted_pure_sum = 0.0;
  for (const auto& part : *rho.decomposition()) {
    chain.weighted_pure_sum +=
        part.weight * (entropy_bits(outcome_distribution(x, part.state)) +
                       entropy_bits(outcome_distribution(y, part.state)));
  }
  chain.state_independent_bound = bound_state_independent(x, y).bound_bits;
  return chain;
}

namespace {

// Gap objective over a real parametrization of the unit sphere.
double gap_objective(const Measurement& x, const Measurement& y,
                     const Eigen::VectorXd& coords, PureState* out_state) {
  const int d = x.dim();
  Vector psi(d);
  for (int k = 0; k < d; ++k) {
    psi(k) = Complex(coords(2 * k), coords(2 * k + 1));
  }
  double nrm = psi.norm();
  if (nrm < 1e-8) return 1e6;  // degenerate point, steer away
  psi /= nrm;
  PureState state = PureState::from_amplitudes(psi);
  double value = entropy_bits(outcome_distribution(x, state)) +
                 entropy_bits(outcome_distribution(y, state)) -
                 bound_state_dependent(x, y, state).bound_bits;
  if (out_state) *out_state = state;
  return value;
}

// Plain Nelder-Mead; entropies are non-smooth where outcomes die out, so a
// simplex method beats anything gradient-based here.
double nelder_mead(const Measurement& x, const Measurement& y,
                   Eigen::VectorXd start, int max_iter,
                   Eigen::VectorXd* best_point) {
  const int n = static_cast<int>(start.size());
  std::vector<Eigen::VectorXd> simplex;
  std::vector<double> value;
  simplex.push_back(start);
  value.push_back(gap_objective(x, y, start, nullptr));
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd p = start;
    p(k) += 0.25;
    simplex.push_back(p);
    value.push_back(gap_objective(x, y, p, nullptr));
  }

  auto order = [&]() {
    for (size_t a = 0; a < simplex.size(); ++a) {
      for (size_t b = a + 1; b < simplex.size(); ++b) {
        if (value[b] < value[a]) {
          std::swap(value[a], value[b]);
          std::swap(simplex[a], simplex[b]);
        }
      }
    }
  };
  order();

  for (int iter = 0; iter < max_iter; ++iter) {
    const size_t worst = simplex.size() - 1;
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (size_t a = 0; a < worst; ++a) centroid += simplex[a];
    centroid /= static_cast<double>(worst);

    Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    double fr = gap_objective(x, y, reflected, nullptr);
    if (fr < value[0]) {
      Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      double fe = gap_objective(x, y, expanded, nullptr);
      if (fe < fr) {
        simplex[worst] = expanded;
        value[worst] = fe;
      } else {
        simplex[worst] = reflected;
        value[worst] = fr;
      }
    } else if (fr < value[worst - 1]) {
      simplex[worst] = reflected;
      value[worst] = fr;
    } else {
      Eigen::VectorXd contracted = centroid + 0.5 * (simplex[worst] - centroid);
      double fc = gap_objective(x, y, contracted, nullptr);
      if (fc < value[worst]) {
        simplex[worst] = contracted;
        value[worst] = fc;
      } else {
        for (size_t a = 1; a < simplex.size(); ++a) {
          simplex[a] = simplex[0] + 0.5 * (simplex[a] - simplex[0]);
          value[a] = gap_objective(x, y, simplex[a], nullptr);
        }
      }
    }
    order();
    if (std::abs(value[simplex.size() - 1] - value[0]) < 1e-12) break;
  }
  *best_point = simplex[0];
  return value[0];
}

}  // namespace

GapSearchResult minimize_gap(const Measurement& x, const Measurement& y,
                             int restarts, std::uint64_t seed) {
  check_dims(x.dim(), y.dim(), "minimize_gap");
  if (restarts < 1) {
    throw Error(ErrorCode::OutOfRange, "minimize_gap: restarts < 1");
  }
  const int d = x.dim();
  double best_gap = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_point;
  for (int r = 0; r < restarts; ++r) {
    PureState start = random_pure_state(d, seed + static_cast<std::uint64_t>(r));
    Eigen::VectorXd coords(2 * d);
    for (int k = 0; k < d; ++k) {
      coords(2 * k) = start.amplitudes()(k).real();
      coords(2 * k + 1) = start.amplitudes()(k).imag();
    }
    Eigen::VectorXd point;
    double gap = nelder_mead(x, y, coords, 400, &point);
    if (gap < best_gap) {
      best_gap = gap;
      best_point = point;
    }
  }
  PureState state = random_pure_state(d, seed);  // placeholder, overwritten
  best_gap = gap_objective(x, y, best_point, &state);
  return GapSearchResult{state, best_gap};
}

}  // namespace eup
