#include "eup/io.hpp"

#include <fstream>

namespace eup {

namespace {

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error(ErrorCode::ParseError,
                where + ": complex entry must be [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::ParseError, where + ": matrix must be a row array");
  }
  const size_t rows = j.size();
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) {
    throw Error(ErrorCode::ParseError, where + ": empty matrix row");
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw Error(ErrorCode::ParseError,
                  where + ": ragged row " + std::to_string(r));
    }
    for (size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(j[r][c], where + ", row " + std::to_string(r));
    }
  }
  return m;
}

Json measurement_to_json(const Measurement& m,
                         const std::vector<std::string>& labels,
                         const std::string& provenance) {
  Json doc;
  doc["dim"] = m.dim();
  Json ops = Json::array();
  for (int i = 0; i < m.outcomes(); ++i) {
    ops.push_back(matrix_to_json(m.op(i)));
  }
  doc["operators"] = std::move(ops);
  if (!labels.empty()) doc["labels"] = labels;
  if (!provenance.empty()) doc["provenance"] = provenance;
  return doc;
}

Measurement measurement_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("operators")) {
    throw Error(ErrorCode::ParseError,
                where + ": measurement needs \"dim\" and \"operators\"");
  }
  int dim = j["dim"].get<int>();
  std::vector<Matrix> ops;
  const Json& arr = j["operators"];
  if (!arr.is_array() || arr.empty()) {
    throw Error(ErrorCode::ParseError, where + ": empty operator list");
  }
  for (size_t i = 0; i < arr.size(); ++i) {
    ops.push_back(
        matrix_from_json(arr[i], where + ", operator " + std::to_string(i)));
  }
  return Measurement::validate(std::move(ops), dim);
}

Json state_to_json(const PureState& psi) {
  Json doc;
  doc["dim"] = psi.dim();
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    amps.push_back(complex_to_json(psi.amplitudes()(k)));
  }
  doc["amplitudes"] = std::move(amps);
  return doc;
}

Json state_to_json(const MixedState& rho) {
  Json doc;
  doc["dim"] = rho.dim();
  doc["rho"] = matrix_to_json(rho.rho());
  if (rho.decomposition()) {
    Json mix = Json::array();
    for (const auto& part : *rho.decomposition()) {
      Json entry;
      entry["weight"] = part.weight;
      entry["amplitudes"] = state_to_json(part.state)["amplitudes"];
      mix.push_back(std::move(entry));
    }
    doc["mixture"] = std::move(mix);
  }
  return doc;
}

AnyState state_from_json(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("amplitudes")) {
    const Json& arr = j["amplitudes"];
    if (!arr.is_array() || arr.empty()) {
      throw Error(ErrorCode::ParseError, where + ": empty amplitude list");
    }
    Vector psi(static_cast<Eigen::Index>(arr.size()));
    for (size_t k = 0; k < arr.size(); ++k) {
      psi(static_cast<Eigen::Index>(k)) =
          complex_from_json(arr[k], where + ", amplitude " + std::to_string(k));
    }
    return PureState::from_amplitudes(std::move(psi));
  }
  if (j.is_object() && j.contains("mixture")) {
    std::vector<WeightedComponent> parts;
    for (const Json& entry : j["mixture"]) {
      if (!entry.contains("weight") || !entry.contains("amplitudes")) {
        throw Error(ErrorCode::ParseError,
                    where + ": mixture entries need weight and amplitudes");
      }
      Json pure;
      pure["amplitudes"] = entry["amplitudes"];
      parts.push_back({entry["weight"].get<double>(),
                       std::get<PureState>(state_from_json(pure, where))});
    }
    return MixedState::from_mixture(std::move(parts));
  }
  if (j.is_object() && j.contains("rho")) {
    return MixedState::from_density(matrix_from_json(j["rho"], where));
  }
  throw Error(ErrorCode::ParseError,
              where + ": state needs \"amplitudes\", \"rho\" or \"mixture\"");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, path + ": cannot open");
  }
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::ParseError, path + ": cannot open for writing");
  }
  out << j.dump(2) << "\n";
}

Measurement load_measurement(const std::string& path) {
  return measurement_from_json(load_json(path), path);
}

AnyState load_state(const std::string& path) {
  return state_from_json(load_json(path), path);
}

}  // namespace eup
