#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "eup/entropy_bounds.hpp"
#include "eup/group_fourier.hpp"
#include "eup/interpolation.hpp"
#include "eup/io.hpp"
#include "eup/naimark.hpp"

namespace {

using eup::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

double report_tolerance() {
  if (const char* env = std::getenv("EUP_TOL")) {
    char* end = nullptr;
    double tol = std::strtod(env, &end);
    if (end != env && tol > 0.0) return tol;
  }
  return 1e-9;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_file(const std::string& path) {
  Json j = eup::load_json(path);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(j.dump())));
  return buf;
}

struct Report {
  Json doc;
  std::vector<std::pair<std::string, std::string>> lines;

  void add(const std::string& key, const Json& value,
           const std::string& human) {
    doc[key] = value;
    lines.emplace_back(key, human);
  }
  void add_bits(const std::string& key, double value) {
    add(key, value, fixed6(value));
  }
};

int emit(const Report& report, bool machine, bool finding) {
  if (machine) {
    std::printf("%s\n", report.doc.dump(2).c_str());
  } else {
    for (const auto& [key, value] : report.lines) {
      std::printf("%s: %s\n", key.c_str(), value.c_str());
    }
    std::printf("status: %s\n", finding ? "FINDING" : "ok");
  }
  return finding ? kExitFinding : kExitOk;
}

eup::PureState require_pure(eup::AnyState state, const std::string& path) {
  if (auto* pure = std::get_if<eup::PureState>(&state)) return *pure;
  throw eup::Error(eup::ErrorCode::ParseError, path + ": pure state required");
}

eup::MeasurementKind parse_kind(const std::string& s) {
  if (s == "povm") return eup::MeasurementKind::povm;
  if (s == "projective") return eup::MeasurementKind::projective;
  throw eup::Error(eup::ErrorCode::ParseError,
                   "kind must be povm or projective: " + s);
}

int cmd_validate(const std::string& file, bool machine) {
  Report report;
  report.add("command", "validate", "validate");
  report.add("input", digest_file(file), file);
  Json j = eup::load_json(file);
  if (j.contains("operators")) {
    eup::Measurement m = eup::measurement_from_json(j, file);
    report.add("object", "measurement", "measurement");
    report.add("dim", m.dim(), std::to_string(m.dim()));
    report.add("outcomes", m.outcomes(), std::to_string(m.outcomes()));
    report.add("kind", m.projective() ? "projective" : "povm",
               m.projective() ? "projective" : "povm");
    int zeros = 0;
    for (int i = 0; i < m.outcomes(); ++i) zeros += m.zero_op(i) ? 1 : 0;
    report.add("zero_operators", zeros, std::to_string(zeros));
  } else {
    eup::AnyState s = eup::state_from_json(j, file);
    bool pure = std::holds_alternative<eup::PureState>(s);
    report.add("object", pure ? "pure_state" : "mixed_state",
               pure ? "pure_state" : "mixed_state");
    int dim = pure ? std::get<eup::PureState>(s).dim()
                   : std::get<eup::MixedState>(s).dim();
    report.add("dim", dim, std::to_string(dim));
  }
  return emit(report, machine, false);
}

int cmd_entropy(const std::string& meas, const std::string& state,
                bool machine) {
  Report report;
  report.add("command", "entropy", "entropy");
  report.add("measurement", digest_file(meas), meas);
  report.add("state", digest_file(state), state);
  eup::Measurement m = eup::load_measurement(meas);
  eup::AnyState s = eup::load_state(state);
  eup::OutcomeDistribution dist = std::visit(
      [&](const auto& concrete) { return eup::outcome_distribution(m, concrete); },
      s);
  std::string probs;
  for (double p : dist.probabilities) {
    if (!probs.empty()) probs += ", ";
    probs += fixed6(p);
  }
  report.add("probabilities", dist.probabilities, probs);
  report.add_bits("entropy_bits", eup::entropy_bits(dist));
  return emit(report, machine, false);
}

int cmd_bound(const std::string& a, const std::string& b,
              const std::string& state, bool single, bool machine) {
  const double tol = report_tolerance();
  Report report;
  report.add("command", "bound", "bound");
  report.add("a", digest_file(a), a);
  eup::Measurement ma = eup::load_measurement(a);

  eup::BoundReport bound;
  bool finding = false;
  if (single) {
    bound = eup::bound_single(ma);
  } else {
    if (b.empty()) {
      throw eup::Error(eup::ErrorCode::ParseError,
                       "bound: --b required unless --single");
    }
    report.add("b", digest_file(b), b);
    eup::Measurement mb = eup::load_measurement(b);
    if (!state.empty()) {
      report.add("state_file", digest_file(state), state);
      eup::PureState psi = require_pure(eup::load_state(state), state);
      bound = eup::bound_state_dependent(ma, mb, psi);
      double sum = eup::entropy_bits(eup::outcome_distribution(ma, psi)) +
                   eup::entropy_bits(eup::outcome_distribution(mb, psi));
      report.add_bits("entropy_sum_bits", sum);
      double slack = sum - bound.bound_bits;
      report.add_bits("slack_bits", slack);
      finding = slack < -tol;
    } else {
      bound = eup::bound_state_independent(ma, mb);
    }
  }
  report.add_bits("bound_bits", bound.bound_bits);
  report.add("theorem", eup::theorem_name(bound.theorem),
             eup::theorem_name(bound.theorem));
  report.add("argmax", Json::array({bound.argmax_i, bound.argmax_j}),
             "(" + std::to_string(bound.argmax_i) + ", " +
                 std::to_string(bound.argmax_j) + ")");
  report.add("admissible_pairs", bound.admissible_pairs,
             std::to_string(bound.admissible_pairs));
  report.add("ratio_at_argmax", bound.ratio_at_argmax,
             fixed6(bound.ratio_at_argmax));
  return emit(report, machine, finding);
}

int cmd_dilate(const std::string& in, const std::string& out, bool machine) {
  Report report;
  report.add("command", "dilate", "dilate");
  report.add("input", digest_file(in), in);
  eup::Measurement y = eup::load_measurement(in);
  eup::NaimarkDilation dilation = eup::dilate(y);
  double residual = 0.0;
  for (int j = 0; j < dilation.projectors.outcomes(); ++j) {
    const eup::Matrix& q = dilation.projectors.op(j);
    residual = std::max(residual, eup::max_abs(eup::Matrix(q * q - q)));
  }
  eup::save_json(out,
                 eup::measurement_to_json(dilation.projectors, {},
                                          "dilation of " + in));
  report.add("output", out, out);
  report.add("ambient_dim", dilation.ambient_dim,
             std::to_string(dilation.ambient_dim));
  report.add("max_projector_residual", residual, fixed6(residual));
  return emit(report, machine, false);
}

int cmd_verify(int dim, const std::string& outcomes, const std::string& kinds,
               int trials, std::uint64_t seed, bool machine) {
  const double tol = report_tolerance();
  auto split2 = [](const std::string& s) -> std::pair<std::string, std::string> {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
      throw eup::Error(eup::ErrorCode::ParseError,
                       "expected comma-separated pair: " + s);
    }
    return {s.substr(0, comma), s.substr(comma + 1)};
  };
  auto [m_str, n_str] = split2(outcomes);
  auto [k1_str, k2_str] = split2(kinds);
  int m = std::stoi(m_str);
  int n = std::stoi(n_str);
  eup::MeasurementKind k1 = parse_kind(k1_str);
  eup::MeasurementKind k2 = parse_kind(k2_str);

  double min_slack = 1e300;
  double sum_slack = 0.0;
  double min_dominance = 1e300;
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t base = seed + static_cast<std::uint64_t>(trial);
    eup::Measurement x = eup::random_measurement(dim, m, k1, base * 3 + 1);
    eup::Measurement y = eup::random_measurement(dim, n, k2, base * 3 + 2);
    eup::PureState psi = eup::random_pure_state(dim, base * 3 + 3);
    double bound = eup::bound_state_dependent(x, y, psi).bound_bits;
    double sum = eup::entropy_bits(eup::outcome_distribution(x, psi)) +
                 eup::entropy_bits(eup::outcome_distribution(y, psi));
    double slack = sum - bound;
    min_slack = std::min(min_slack, slack);
    sum_slack += slack;
    min_dominance = std::min(
        min_dominance, bound - eup::bound_state_independent(x, y).bound_bits);
  }
  bool finding = min_slack < -tol || min_dominance < -tol;

  Report report;
  report.add("command", "verify", "verify");
  report.add("dim", dim, std::to_string(dim));
  report.add("outcomes", outcomes, outcomes);
  report.add("kind", kinds, kinds);
  report.add("trials", trials, std::to_string(trials));
  report.add("seed", seed, std::to_string(seed));
  report.add_bits("min_slack_bits", min_slack);
  report.add_bits("mean_slack_bits", sum_slack / trials);
  report.add_bits("min_dominance_slack_bits", min_dominance);
  return emit(report, machine, finding);
}

int cmd_search(const std::string& a, const std::string& b, int restarts,
               std::uint64_t seed, bool machine) {
  Report report;
  report.add("command", "search", "search");
  report.add("a", digest_file(a), a);
  report.add("b", digest_file(b), b);
  report.add("restarts", restarts, std::to_string(restarts));
  report.add("seed", seed, std::to_string(seed));
  eup::Measurement ma = eup::load_measurement(a);
  eup::Measurement mb = eup::load_measurement(b);
  eup::GapSearchResult result = eup::minimize_gap(ma, mb, restarts, seed);
  report.add_bits("gap_bits", result.gap_bits);
  report.doc["state"] = eup::state_to_json(result.state);
  return emit(report, machine, result.gap_bits < -1e-7);
}

int cmd_rt_check(const std::string& a, const std::string& b,
                 const std::string& state, double t, int samples,
                 std::uint64_t seed, bool machine) {
  Report report;
  report.add("command", "rt-check", "rt-check");
  report.add("a", digest_file(a), a);
  report.add("b", digest_file(b), b);
  report.add("state_file", digest_file(state), state);
  report.add("t", t, fixed6(t));
  report.add("samples", samples, std::to_string(samples));
  report.add("seed", seed, std::to_string(seed));
  eup::Measurement ma = eup::load_measurement(a);
  eup::Measurement mb = eup::load_measurement(b);
  eup::PureState psi = require_pure(eup::load_state(state), state);
  eup::OverlapMatrix overlap = eup::overlap_matrix(ma, mb, psi);
  eup::RieszThorinCheck check = eup::rt_check(overlap, t, samples, seed);
  report.add("r_max", overlap.r_max, fixed6(overlap.r_max));
  report.add("interpolated_bound", check.interpolated_bound,
             fixed6(check.interpolated_bound));
  report.add("norm_estimate", check.norm_estimate, fixed6(check.norm_estimate));
  report.add("norm_slack", check.norm_slack, fixed6(check.norm_slack));
  report.add("vector_slack", check.vector_slack, fixed6(check.vector_slack));

  eup::EntropyLimitCheck limit = eup::entropy_limit_check(
      overlap, eup::outcome_distribution(ma, psi),
      eup::outcome_distribution(mb, psi));
  report.add("limit_bounded", limit.bounded, limit.bounded ? "yes" : "no");
  report.add("limit_monotone", limit.monotone, limit.monotone ? "yes" : "no");
  report.doc["limit_log_values"] = limit.log_values;
  return emit(report, machine, !check.ok || !limit.bounded);
}

int cmd_group(const std::string& name, const std::string& state_spec,
              bool machine) {
  const double tol = report_tolerance();
  eup::FiniteGroup g = eup::build_group(name);
  eup::IrrepTable table = eup::irreps(g);

  eup::Vector psi(g.order);
  if (state_spec == "uniform") {
    psi.setConstant(1.0 / std::sqrt(static_cast<double>(g.order)));
  } else if (state_spec == "delta") {
    psi.setZero();
    psi(g.identity) = 1.0;
  } else {
    psi = require_pure(eup::load_state(state_spec), state_spec).amplitudes();
  }
  eup::GroupCaseReport gr = eup::verify_group_case(
      g, table, eup::PureState::from_amplitudes(psi));

  Report report;
  report.add("command", "group", "group");
  report.add("name", g.name, g.name);
  report.add("order", g.order, std::to_string(g.order));
  report.add("state", state_spec, state_spec);
  report.add_bits("position_entropy_bits", gr.position_entropy);
  report.add_bits("fourier_entropy_bits", gr.fourier_entropy);
  report.add_bits("lhs_bits", gr.position_entropy + gr.fourier_entropy);
  report.add_bits("rhs_bits", gr.rhs_bits);
  report.add_bits("slack_bits", gr.slack);
  report.add("equality", gr.equality, gr.equality ? "yes" : "no");
  report.add("cross_check_diff", gr.cross_check_diff,
             fixed6(gr.cross_check_diff));
  return emit(report, machine, gr.slack < -tol || gr.cross_check_diff > tol);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bounds for quantum measurements"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--json", machine, "emit a machine-readable JSON report");

  std::string file, meas, state, a, b, in, out, outcomes, kinds, name;
  int dim = 2, trials = 100, restarts = 20, samples = 2000;
  double t = 0.5;
  std::uint64_t seed = 0;
  bool single = false;

  auto* validate = app.add_subcommand("validate", "validate a document");
  validate->add_option("file", file)->required();

  auto* entropy = app.add_subcommand("entropy", "outcome entropy of a measurement in a state");
  entropy->add_option("--meas", meas)->required();
  entropy->add_option("--state", state)->required();

  auto* bound = app.add_subcommand("bound", "entropy lower bound for a measurement pair");
  bound->add_option("--a", a)->required();
  bound->add_option("--b", b);
  bound->add_option("--state", state);
  bound->add_flag("--single", single, "single-measurement bound on --a");

  auto* dilate = app.add_subcommand("dilate", "projective dilation of a POVM");
  dilate->add_option("--in", in)->required();
  dilate->add_option("--out", out)->required();

  auto* verify = app.add_subcommand("verify", "random campaign over the master inequality");
  verify->add_option("--dim", dim)->required();
  verify->add_option("--outcomes", outcomes)->required();
  verify->add_option("--kind", kinds)->required();
  verify->add_option("--trials", trials)->required();
  verify->add_option("--seed", seed)->required();

  auto* search = app.add_subcommand("search", "minimize the bound gap over pure states");
  search->add_option("--a", a)->required();
  search->add_option("--b", b)->required();
  search->add_option("--restarts", restarts)->required();
  search->add_option("--seed", seed)->required();

  auto* rt = app.add_subcommand("rt-check", "interpolation-chain check on an overlap matrix");
  rt->add_option("--a", a)->required();
  rt->add_option("--b", b)->required();
  rt->add_option("--state", state)->required();
  rt->add_option("--t", t)->required();
  rt->add_option("--samples", samples)->required();
  rt->add_option("--seed", seed)->required();

  auto* group = app.add_subcommand("group", "finite-group example");
  group->add_option("--name", name)->required();
  group->add_option("--state", state)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file, machine);
    if (entropy->parsed()) return cmd_entropy(meas, state, machine);
    if (bound->parsed()) return cmd_bound(a, b, state, single, machine);
    if (dilate->parsed()) return cmd_dilate(in, out, machine);
    if (verify->parsed())
      return cmd_verify(dim, outcomes, kinds, trials, seed, machine);
    if (search->parsed()) return cmd_search(a, b, restarts, seed, machine);
    if (rt->parsed()) return cmd_rt_check(a, b, state, t, samples, seed, machine);
    if (group->parsed()) return cmd_group(name, state, machine);
  } catch (const eup::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
