#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eup/io.hpp"
#include "helpers.hpp"

using namespace eup;
using namespace eup::testing;

TEST_CASE("measurement round trip is exact") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Measurement m = random_measurement(3, 4, MeasurementKind::povm, seed);
    Json doc = measurement_to_json(m);
    // serialize → parse → serialize must preserve every entry bit-for-bit
    Measurement back = measurement_from_json(Json::parse(doc.dump()), "mem");
    REQUIRE(back.outcomes() == m.outcomes());
    for (int i = 0; i < m.outcomes(); ++i) {
      CHECK(back.op(i) == m.op(i));
    }
    CHECK(measurement_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("state round trip") {
  PureState psi = random_pure_state(5, 3);
  Json doc = state_to_json(psi);
  AnyState back = state_from_json(Json::parse(doc.dump()), "mem");
  REQUIRE(std::holds_alternative<PureState>(back));
  CHECK(std::get<PureState>(back).amplitudes() == psi.amplitudes());

  std::vector<WeightedComponent> parts{{0.25, random_pure_state(3, 1)},
                                       {0.75, random_pure_state(3, 2)}};
  MixedState rho = MixedState::from_mixture(parts);
  Json mixed_doc = state_to_json(rho);
  AnyState mixed_back = state_from_json(Json::parse(mixed_doc.dump()), "mem");
  REQUIRE(std::holds_alternative<MixedState>(mixed_back));
  CHECK(max_abs(std::get<MixedState>(mixed_back).rho() - rho.rho()) < 1e-15);
  CHECK(std::get<MixedState>(mixed_back).decomposition().has_value());
}

TEST_CASE("labels and provenance survive") {
  Measurement m = computational_basis(2);
  Json doc = measurement_to_json(m, {"up", "down"}, "dilation of foo.json");
  CHECK(doc["labels"][1] == "down");
  CHECK(doc["provenance"] == "dilation of foo.json");
}

TEST_CASE("positioned parse errors") {
  Json bad;
  bad["dim"] = 2;
  bad["operators"] = Json::array({Json::array({Json::array({1.0, 0.0})})});
  try {
    measurement_from_json(bad, "f.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("operator 0") != std::string::npos);
  }

  // structurally fine but incomplete: validation error, not parse error
  Json incomplete;
  incomplete["dim"] = 2;
  Json id_matrix = matrix_to_json(Matrix::Identity(2, 2));
  incomplete["operators"] = Json::array({id_matrix, id_matrix});
  try {
    measurement_from_json(incomplete, "f.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompletenessViolated);
  }

  // non-unit state
  Json state;
  state["amplitudes"] =
      Json::array({Json::array({1.0, 0.0}), Json::array({1.0, 0.0})});
  try {
    state_from_json(state, "s.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalized);
  }
}
