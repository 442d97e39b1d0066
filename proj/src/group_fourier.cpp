#include "eup/group_fourier.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

namespace eup {

namespace {

constexpr Complex kI{0.0, 1.0};

struct CatalogId {
  enum class Family { cyclic, dihedral, symmetric3, quaternion8 } family;
  int parameter;  // N for Z, n for D
};

CatalogId parse_name(const std::string& raw) {
  std::string name;
  for (char c : raw) name += static_cast<char>(std::toupper(c));
  auto numeric_suffix = [&](size_t from) -> int {
    if (from >= name.size()) return -1;
    for (size_t k = from; k < name.size(); ++k) {
      if (!std::isdigit(name[k])) return -1;
    }
    return std::stoi(name.substr(from));
  };
  if (name == "S3") return {CatalogId::Family::symmetric3, 3};
  if (name == "Q8") return {CatalogId::Family::quaternion8, 8};
  if (!name.empty() && name[0] == 'Z') {
    int n = numeric_suffix(1);
    if (n >= 1 && n <= 64) return {CatalogId::Family::cyclic, n};
  }
  if (!name.empty() && name[0] == 'D') {
    int n = numeric_suffix(1);
    if (n >= 2 && n <= 12) return {CatalogId::Family::dihedral, n};
  }
  throw Error(ErrorCode::UnknownGroup, "unknown catalog group: " + raw);
}

Matrix scalar(Complex z) {
  Matrix m(1, 1);
  m(0, 0) = z;
  return m;
}

// Quaternion units as 2x2 unitaries.
std::array<Matrix, 8> quaternion_matrices() {
  Matrix qi(2, 2), qj(2, 2), qk(2, 2), id = Matrix::Identity(2, 2);
  qi << kI, 0.0, 0.0, -kI;
  qj << 0.0, 1.0, -1.0, 0.0;
  qk << 0.0, kI, kI, 0.0;
  return {id, -id, qi, -qi, qj, -qj, qk, -qk};
}

std::array<std::array<int, 3>, 6> s3_permutations() {
  // Words t^a u^b with t = (0 1 2), u = (0 1), enumerated a-major.
  std::array<int, 3> t{1, 2, 0};  // t[i] = image of i
  std::array<int, 3> u{1, 0, 2};
  auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
    std::array<int, 3> h{};
    for (int i = 0; i < 3; ++i) h[static_cast<size_t>(i)] = f[static_cast<size_t>(g[static_cast<size_t>(i)])];
    return h;
  };
  std::array<std::array<int, 3>, 6> out{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 2; ++b) {
      std::array<int, 3> perm{0, 1, 2};
      for (int k = 0; k < a; ++k) perm = compose(t, perm);
      if (b) perm = compose(perm, u);
      out[static_cast<size_t>(2 * a + b)] = perm;
    }
  }
  return out;
}

}  // namespace

bool FiniteGroup::abelian() const {
  for (int x = 0; x < order; ++x) {
    for (int y = x + 1; y < order; ++y) {
      if (table[static_cast<size_t>(x)][static_cast<size_t>(y)] !=
          table[static_cast<size_t>(y)][static_cast<size_t>(x)]) {
        return false;
      }
    }
  }
  return true;
}

int IrrepTable::max_dim() const {
  int best = 0;
  for (const auto& irrep : irreps) best = std::max(best, irrep.dim);
  return best;
}

FiniteGroup build_group(const std::string& name) {
  CatalogId id = parse_name(name);
  FiniteGroup g;
  switch (id.family) {
    case CatalogId::Family::cyclic: {
      int n = id.parameter;
      g.name = "Z" + std::to_string(n);
      g.order = n;
      for (int k = 0; k < n; ++k) g.labels.push_back(std::to_string(k));
      g.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          g.table[static_cast<size_t>(x)][static_cast<size_t>(y)] = (x + y) % n;
        }
      }
      break;
    }
    case CatalogId::Family::dihedral: {
      int n = id.parameter;
      g.name = "D" + std::to_string(n);
      g.order = 2 * n;
      for (int k = 0; k < n; ++k) g.labels.push_back("r^" + std::to_string(k));
      for (int k = 0; k < n; ++k) g.labels.push_back("sr^" + std::to_string(k));
      g.table.assign(static_cast<size_t>(2 * n),
                     std::vector<int>(static_cast<size_t>(2 * n)));
      // Element sigma*n + k stands for s^sigma r^k; r^k s = s r^{-k}.
      for (int s1 = 0; s1 < 2; ++s1) {
        for (int k1 = 0; k1 < n; ++k1) {
          for (int s2 = 0; s2 < 2; ++s2) {
            for (int k2 = 0; k2 < n; ++k2) {
              int sigma = s1 ^ s2;
              int k = (((s2 ? -k1 : k1) + k2) % n + n) % n;
              g.table[static_cast<size_t>(s1 * n + k1)]
                     [static_cast<size_t>(s2 * n + k2)] = sigma * n + k;
            }
          }
        }
      }
      break;
    }
    case CatalogId::Family::symmetric3: {
      g.name = "S3";
      g.order = 6;
      auto perms = s3_permutations();
      for (const auto& perm : perms) {
        g.labels.push_back(std::to_string(perm[0]) + std::to_string(perm[1]) +
                           std::to_string(perm[2]));
      }
      g.table.assign(6, std::vector<int>(6));
      for (int x = 0; x < 6; ++x) {
        for (int y = 0; y < 6; ++y) {
          std::array<int, 3> prod{};
          for (int i = 0; i < 3; ++i) {
            prod[static_cast<size_t>(i)] =
                perms[static_cast<size_t>(x)][static_cast<size_t>(
                    perms[static_cast<size_t>(y)][static_cast<size_t>(i)])];
          }
          int index = -1;
          for (int z = 0; z < 6; ++z) {
            if (perms[static_cast<size_t>(z)] == prod) index = z;
          }
          g.table[static_cast<size_t>(x)][static_cast<size_t>(y)] = index;
        }
      }
      break;
    }
    case CatalogId::Family::quaternion8: {
      g.name = "Q8";
      g.order = 8;
      g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
      auto mats = quaternion_matrices();
      g.table.assign(8, std::vector<int>(8));
      for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
          Matrix prod = mats[static_cast<size_t>(x)] * mats[static_cast<size_t>(y)];
          int index = -1;
          for (int z = 0; z < 8; ++z) {
            if (max_abs(prod - mats[static_cast<size_t>(z)]) < 1e-9) index = z;
          }
          if (index < 0) {
            throw Error(ErrorCode::Internal, "Q8 table construction failed");
          }
          g.table[static_cast<size_t>(x)][static_cast<size_t>(y)] = index;
        }
      }
      break;
    }
  }
  g.identity = 0;
  return g;
}

IrrepTable irreps(const FiniteGroup& g) {
  CatalogId id = parse_name(g.name);
  IrrepTable out;
  out.group_order = g.order;
  switch (id.family) {
    case CatalogId::Family::cyclic: {
      int n = id.parameter;
      for (int k = 0; k < n; ++k) {
        Irrep irrep{"chi" + std::to_string(k), 1, {}};
        for (int x = 0; x < n; ++x) {
          double angle = 2.0 * std::numbers::pi * k * x / n;
          irrep.matrices.push_back(scalar(std::polar(1.0, angle)));
        }
        out.irreps.push_back(std::move(irrep));
      }
      break;
    }
    case CatalogId::Family::dihedral: {
      int n = id.parameter;
      auto one_dim = [&](const std::string& label, bool flip_r, bool flip_s) {
        Irrep irrep{label, 1, {}};
        for (int sigma = 0; sigma < 2; ++sigma) {
          for (int k = 0; k < n; ++k) {
            double v = 1.0;
            if (flip_r && (k % 2)) v = -v;
            if (flip_s && sigma) v = -v;
            irrep.matrices.push_back(scalar(v));
          }
        }
        out.irreps.push_back(std::move(irrep));
      };
      one_dim("triv", false, false);
      one_dim("sgn_s", false, true);
      if (n % 2 == 0) {
        one_dim("sgn_r", true, false);
        one_dim("sgn_rs", true, true);
      }
      Matrix swap(2, 2);
      swap << 0.0, 1.0, 1.0, 0.0;
      for (int h = 1; 2 * h < n; ++h) {
        Irrep irrep{"rho" + std::to_string(h), 2, {}};
        for (int sigma = 0; sigma < 2; ++sigma) {
          for (int k = 0; k < n; ++k) {
            double angle = 2.0 * std::numbers::pi * h * k / n;
            Matrix d = Matrix::Zero(2, 2);
            d(0, 0) = std::polar(1.0, angle);
            d(1, 1) = std::polar(1.0, -angle);
            irrep.matrices.push_back(sigma ? Matrix(swap * d) : d);
          }
        }
        out.irreps.push_back(std::move(irrep));
      }
      break;
    }
    case CatalogId::Family::symmetric3: {
      Irrep triv{"triv", 1, {}};
      Irrep sgn{"sgn", 1, {}};
      Irrep rho{"rho", 2, {}};
      Matrix t = Matrix::Zero(2, 2);
      t(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
      t(1, 1) = std::polar(1.0, -2.0 * std::numbers::pi / 3.0);
      Matrix u(2, 2);
      u << 0.0, 1.0, 1.0, 0.0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 2; ++b) {
          triv.matrices.push_back(scalar(1.0));
          sgn.matrices.push_back(scalar(b ? -1.0 : 1.0));
          Matrix m = Matrix::Identity(2, 2);
          for (int k = 0; k < a; ++k) m = t * m;
          if (b) m = m * u;
          rho.matrices.push_back(std::move(m));
        }
      }
      out.irreps.push_back(std::move(triv));
      out.irreps.push_back(std::move(sgn));
      out.irreps.push_back(std::move(rho));
      break;
    }
    case CatalogId::Family::quaternion8: {
      // Classes: {±1}, {±i}, {±j}, {±k} index 0..3 in element order.
      std::array<int, 8> cls{0, 0, 1, 1, 2, 2, 3, 3};
      auto one_dim = [&](const std::string& label, int a, int b) {
        Irrep irrep{label, 1, {}};
        std::array<int, 4> chi{1, a, b, a * b};
        for (int x = 0; x < 8; ++x) {
          irrep.matrices.push_back(
              scalar(static_cast<double>(chi[static_cast<size_t>(cls[static_cast<size_t>(x)])])));
        }
        out.irreps.push_back(std::move(irrep));
      };
      one_dim("triv", 1, 1);
      one_dim("chi_i", 1, -1);
      one_dim("chi_j", -1, 1);
      one_dim("chi_k", -1, -1);
      Irrep rho{"rho", 2, {}};
      for (const Matrix& m : quaternion_matrices()) rho.matrices.push_back(m);
      out.irreps.push_back(std::move(rho));
      break;
    }
  }
  int dim_sum = 0;
  for (const auto& irrep : out.irreps) dim_sum += irrep.dim * irrep.dim;
  if (dim_sum != g.order) {
    throw Error(ErrorCode::Internal, "irrep dimensions do not square-sum");
  }
  return out;
}

std::pair<Measurement, Measurement> peter_weyl_measurements(
    const FiniteGroup& g, const IrrepTable& table) {
  const int n = g.order;
  std::vector<Matrix> position;
  for (int x = 0; x < n; ++x) {
    Vector e = Vector::Zero(n);
    e(x) = 1.0;
    position.push_back(e * e.adjoint());
  }
  std::vector<Matrix> fourier;
  for (const auto& irrep : table.irreps) {
    double weight = std::sqrt(static_cast<double>(irrep.dim) / n);
    for (int i = 0; i < irrep.dim; ++i) {
      for (int j = 0; j < irrep.dim; ++j) {
        Vector f(n);
        for (int x = 0; x < n; ++x) {
          f(x) = weight * irrep.matrices[static_cast<size_t>(x)](i, j);
        }
        fourier.push_back(f * f.adjoint());
      }
    }
  }
  return {Measurement::validate(std::move(position), n),
          Measurement::validate(std::move(fourier), n)};
}

double NCFourier::total_weight() const {
  double sum = 0.0;
  for (const auto& c : coefficients) sum += std::norm(c.value);
  return sum;
}

NCFourier nc_fourier(const PureState& psi, const IrrepTable& table) {
  const int n = table.group_order;
  if (psi.dim() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "nc_fourier: state dim != group order");
  }
  NCFourier out;
  for (size_t p = 0; p < table.irreps.size(); ++p) {
    const auto& irrep = table.irreps[p];
    double weight = std::sqrt(static_cast<double>(irrep.dim) / n);
    for (int i = 0; i < irrep.dim; ++i) {
      for (int j = 0; j < irrep.dim; ++j) {
        Vector f(n);
        for (int x = 0; x < n; ++x) {
          f(x) = weight * irrep.matrices[static_cast<size_t>(x)](i, j);
        }
        out.coefficients.push_back(
            {static_cast<int>(p), i, j, f.dot(psi.amplitudes())});
      }
    }
  }
  return out;
}

double group_bound_rhs(const IrrepTable& table) {
  return std::log2(static_cast<double>(table.group_order)) -
         std::log2(static_cast<double>(table.max_dim()));
}

GroupCaseReport verify_group_case(const FiniteGroup& g, const IrrepTable& table,
                                  const PureState& psi) {
  if (psi.dim() != g.order) {
    throw Error(ErrorCode::DimensionMismatch,
                "verify_group_case: state dim != group order");
  }
  auto [position, fourier] = peter_weyl_measurements(g, table);
  GroupCaseReport report{};
  report.position_entropy = entropy_bits(outcome_distribution(position, psi));
  report.fourier_entropy = entropy_bits(outcome_distribution(fourier, psi));
  report.rhs_bits = group_bound_rhs(table);
  report.slack =
      report.position_entropy + report.fourier_entropy - report.rhs_bits;
  report.equality = std::abs(report.slack) <= 1e-9;
  report.cross_check_diff = std::abs(
      report.rhs_bits - bound_state_independent(position, fourier).bound_bits);
  return report;
}

}  // namespace eup
