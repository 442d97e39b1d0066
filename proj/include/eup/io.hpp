#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eup/measurement.hpp"

namespace eup {

using Json = nlohmann::json;

/// Complex numbers serialize as [re, im]; matrices as row-major arrays of
/// rows. The document carries "dim" plus "operators" (measurement),
/// "amplitudes" (pure state) or "rho"/"mixture" (mixed state).
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where);

Json measurement_to_json(const Measurement& m,
                         const std::vector<std::string>& labels = {},
                         const std::string& provenance = "");
Measurement measurement_from_json(const Json& j, const std::string& where);

Json state_to_json(const PureState& psi);
Json state_to_json(const MixedState& rho);

using AnyState = std::variant<PureState, MixedState>;
AnyState state_from_json(const Json& j, const std::string& where);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

Measurement load_measurement(const std::string& path);
AnyState load_state(const std::string& path);

}  // namespace eup
