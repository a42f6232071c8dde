#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "econlab/economy.hpp"
#include "econlab/scenario.hpp"
#include "econlab/sim.hpp"

namespace econlab {

// Exogenous prices as written in the file: one value per sector,
// dose values by default, optionally normalized at a named numeraire.
struct PriceSpec {
  Vector values;
  Units units = Units::dose;
  std::optional<std::string> numeraire;
};

struct SimSpec {
  SimMode mode = SimMode::closed;
  std::uint64_t periods = 1;
  Vector savings;
};

struct ScenarioFile {
  Economy economy;
  std::optional<PriceSpec> prices;
  std::vector<Scenario> scenarios;
  std::optional<SimSpec> sim;
  std::optional<Vector> surplus; // for the quantity system
};

// Strict schema: unknown keys rejected, all numbers finite, diagnostics
// name the offending field. Throws ParseError / SchemaError /
// ValidationError.
ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile parse_scenario_file(const std::string& path);

nlohmann::json scenario_to_json(const ScenarioFile& file);

// Physical-unit PriceVector from a PriceSpec (applies unit conversion
// and the numeraire normalization when requested).
PriceVector resolve_prices(const Economy& economy, const PriceSpec& spec);

}  // namespace econlab
