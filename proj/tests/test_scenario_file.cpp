#include <doctest.h>

#include <string>

#include <nlohmann/json.hpp>

#include "econlab/scenario_file.hpp"

using namespace econlab;

namespace {

const char* kFull = R"({
  "economy": {
    "sectors": [
      {"name": "bread", "population": 2, "survival_dose": 1, "output": 4.5},
      {"name": "cheese", "population": 1, "survival_dose": 1, "output": 3.75}
    ]
  },
  "prices": {"values": [1.0, 0.5], "units": "dose", "numeraire": "bread"},
  "scenarios": [
    {"kind": "output_scaling", "target": "bread", "gamma": 2.0},
    {"kind": "labour_saving", "target": "cheese", "g": 0.5},
    {"kind": "add_luxury", "name": "carpets", "output": 3.0}
  ],
  "sim": {"mode": "closed", "periods": 5, "savings": [0.0, 1.0]},
  "surplus": [1.5, 0.75]
})";

}  // namespace

TEST_CASE("full scenario file round trip") {
  const ScenarioFile file = parse_scenario_text(kFull);
  CHECK(file.economy.size() == 2);
  CHECK(file.economy.sector(0).name == "bread");
  CHECK(file.economy.full_incidence());
  REQUIRE(file.prices.has_value());
  CHECK(file.prices->units == Units::dose);
  CHECK(file.prices->numeraire == "bread");
  REQUIRE(file.scenarios.size() == 3);
  CHECK(file.scenarios[0].kind == ScenarioKind::output_scaling);
  CHECK(file.scenarios[1].g == 0.5);
  CHECK(file.scenarios[2].new_sector.name == "carpets");
  CHECK(file.scenarios[2].new_sector.consumes_own);
  REQUIRE(file.sim.has_value());
  CHECK(file.sim->periods == 5);
  REQUIRE(file.surplus.has_value());
  CHECK((*file.surplus)[1] == 0.75);

  // Serialize and reparse: identical contents.
  const ScenarioFile again = parse_scenario_text(scenario_to_json(file).dump());
  CHECK(scenario_to_json(again) == scenario_to_json(file));
}

TEST_CASE("incidence matrix parses into economy structure") {
  const std::string text = R"({
    "economy": {
      "sectors": [
        {"name": "bread", "population": 1, "survival_dose": 1, "output": 4},
        {"name": "cheese", "population": 1, "survival_dose": 1, "output": 4},
        {"name": "carpets", "population": 1, "survival_dose": 1, "output": 3}
      ],
      "incidence": [[1, 1, 1], [1, 1, 1], [0, 0, 1]]
    }
  })";
  const ScenarioFile file = parse_scenario_text(text);
  CHECK_FALSE(file.economy.full_incidence());
  CHECK_FALSE(file.economy.uses(2, 0));
  CHECK(file.economy.uses(2, 2));
  const ScenarioFile again = parse_scenario_text(scenario_to_json(file).dump());
  CHECK(scenario_to_json(again) == scenario_to_json(file));
}

TEST_CASE("malformed JSON raises ParseError") {
  CHECK_THROWS_AS(parse_scenario_text("{"), ParseError);
  CHECK_THROWS_AS(parse_scenario_text(""), ParseError);
  CHECK_THROWS_AS(parse_scenario_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("schema violations name the offending field") {
  auto expect = [](const std::string& text, const std::string& needle) {
    try {
      parse_scenario_text(text);
      FAIL("expected SchemaError for ", needle);
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect("[]", "$");
  expect(R"({"bogus": 1})", "$.bogus");
  expect(R"({"economy": {"sectors": [{"name": "a", "population": 1,
           "survival_dose": 1}]}})",
         "$.economy.sectors[0].output");
  expect(R"({"economy": {"sectors": [{"name": "a", "population": 1,
           "survival_dose": 1, "output": "three"}]}})",
         "$.economy.sectors[0].output");
  expect(R"({"economy": {"sectors": [
           {"name": "a", "population": 1, "survival_dose": 1, "output": 3},
           {"name": "b", "population": 1, "survival_dose": 1, "output": 3}],
           "incidence": [[1, 2], [1, 1]]}})",
         "$.economy.incidence[0][1]");
  expect(R"({"economy": {"sectors": [
           {"name": "a", "population": 1, "survival_dose": 1, "output": 3},
           {"name": "b", "population": 1, "survival_dose": 1, "output": 3}]},
           "prices": {"values": [1]}})",
         "$.prices.values");
  expect(R"({"economy": {"sectors": [
           {"name": "a", "population": 1, "survival_dose": 1, "output": 3},
           {"name": "b", "population": 1, "survival_dose": 1, "output": 3}]},
           "scenarios": [{"kind": "mystery"}]})",
         "$.scenarios[0].kind");
  expect(R"({"economy": {"sectors": [
           {"name": "a", "population": 1, "survival_dose": 1, "output": 3},
           {"name": "b", "population": 1, "survival_dose": 1, "output": 3}]},
           "scenarios": [{"kind": "add_luxury", "name": "x", "output": 2,
                          "consumers": ["a"]}]})",
         "$.scenarios[0].consumers");
  expect(R"({"economy": {"sectors": [
           {"name": "a", "population": 1, "survival_dose": 1, "output": 3},
           {"name": "b", "population": 1, "survival_dose": 1, "output": 3}]},
           "sim": {"mode": "closed", "periods": 0, "savings": [0, 0]}})",
         "$.sim.periods");
}

TEST_CASE("economy invariants surface as ValidationError") {
  // Sector that cannot feed its own workers: schema-valid, economy-invalid.
  const std::string text = R"({
    "economy": {"sectors": [
      {"name": "a", "population": 2, "survival_dose": 1, "output": 1.5},
      {"name": "b", "population": 1, "survival_dose": 1, "output": 3}
    ]}
  })";
  CHECK_THROWS_AS(parse_scenario_text(text), ValidationError);
}

TEST_CASE("resolve_prices converts dose values and normalizes") {
  const Economy econ({{"a", 2, 0.5, 6}, {"b", 1, 4, 24}});

  PriceSpec dose_spec{{1.0, 2.0}, Units::dose, std::nullopt};
  const auto pv = resolve_prices(econ, dose_spec);
  CHECK(pv.prices[0] == doctest::Approx(2.0));   // 1 per dose of size 0.5
  CHECK(pv.prices[1] == doctest::Approx(0.5));   // 2 per dose of size 4

  PriceSpec named{{1.0, 2.0}, Units::dose, "b"};
  const auto norm = resolve_prices(econ, named);
  // Numeraire dose worth 1: p_b * F_b == 1.
  CHECK(norm.prices[1] * 4.0 == doctest::Approx(1.0));
  CHECK(norm.prices[0] == doctest::Approx(1.0));  // ratio preserved

  PriceSpec phys{{3.0, 1.5}, Units::physical, std::nullopt};
  const auto raw = resolve_prices(econ, phys);
  CHECK(raw.prices[0] == 3.0);
  CHECK(raw.prices[1] == 1.5);

  PriceSpec bad{{1.0, 0.0}, Units::dose, std::nullopt};
  CHECK_THROWS_AS(resolve_prices(econ, bad), ValidationError);
}
