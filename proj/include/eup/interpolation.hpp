#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eup/entropy_bounds.hpp"

namespace eup {

/// Extended-real Hölder exponent in [1, ∞]. Infinity is a symbolic state, not
/// a float, so norm code can branch on it instead of exponentiating with inf.
class Exponent {
 public:
  explicit Exponent(double p);
  static Exponent infinity();
  static Exponent from_reciprocal(double r);  // r in [0, 1]

  bool is_infinite() const { return infinite_; }
  double value() const;            // finite value; throws if infinite
  double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

 private:
  Exponent(bool infinite, double value) : infinite_(infinite), value_(value) {}
  bool infinite_;
  double value_;
};

/// Hölder conjugate: 1/p + 1/q = 1, with 1 <-> ∞.
Exponent conjugate_exponent(Exponent p);

/// Harmonic interpolation of reciprocals at parameter t in (0,1).
std::pair<Exponent, Exponent> interpolate_exponents(Exponent p0, Exponent q0,
                                                    Exponent p1, Exponent q1,
                                                    double t);

double vector_norm(const Vector& x, Exponent p);

/// Sampled lower bound on the p→q operator norm sup_{||x||_p=1} ||Tx||_q.
/// Candidates: coordinate vectors, the top right-singular vector, random
/// directions, and a seeded local refinement. Every candidate is feasible,
/// so the estimate never exceeds the true norm; it is nondecreasing in
/// `samples` for a fixed seed.
double pq_norm_lower_bound(const Matrix& t, Exponent p, Exponent q,
                           int samples, std::uint64_t seed);

struct RieszThorinCheck {
  double t;
  double r_max;
  double interpolated_bound;  // r_max^t
  double norm_estimate;       // lower bound on the interpolated operator norm
  double norm_slack;          // interpolated_bound - norm_estimate
  double vector_slack;        // r_max^t ||a||_{p_t} - ||b||_{q_t}
  bool ok;
};

/// Checks the interpolated norm bound on an overlap matrix at parameter t,
/// both through the operator-norm sampler and directly on the coefficient
/// vectors a, b. Violations are reported via `ok`, never thrown.
RieszThorinCheck rt_check(const OverlapMatrix& overlap, double t, int samples,
                          std::uint64_t seed);

struct EntropyLimitCheck {
  std::vector<double> t_values;
  std::vector<double> log_values;  // natural log of the interpolated quantity
  double r_squared;
  double limit_nats;  // -(H_p + H_q) in nats, the t→0 limit
  bool bounded;       // every value <= r_max^2 within tolerance
  bool monotone;      // approach to the limit is monotone within 1e-6
};

/// Evaluates the small-t entropy limit of the interpolation chain on the
/// distributions induced by the same state as the overlap matrix.
EntropyLimitCheck entropy_limit_check(const OverlapMatrix& overlap,
                                      const OutcomeDistribution& p,
                                      const OutcomeDistribution& q);

}  // namespace eup
