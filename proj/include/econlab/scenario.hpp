#pragma once

#include <string>
#include <vector>

#include "econlab/economy.hpp"
#include "econlab/natural.hpp"

namespace econlab {

// Specification of an extra sector. The new commodity is consumed by the
// sectors listed in `consumers` (plus the new sector itself when
// `consumes_own` is set); the new sector's workers consume `inputs`.
struct NewSectorSpec {
  std::string name;
  double population = 1.0;
  double survival_dose = 1.0;
  double output = 0.0;                 // Q for the new sector
  std::vector<std::string> inputs;     // empty: all existing commodities
  std::vector<std::string> consumers;  // empty: nobody but the sector itself
  bool consumes_own = true;
};

enum class ScenarioKind { output_scaling, labour_saving, add_luxury, add_input_sector };

struct Scenario {
  ScenarioKind kind = ScenarioKind::output_scaling;
  std::string target;      // output_scaling / labour_saving
  double gamma = 1.0;      // output_scaling, >= 1
  double g = 1.0;          // labour_saving, in [0, 1]
  NewSectorSpec new_sector; // add_luxury / add_input_sector
};

// Target output scaled by gamma >= 1, everything else unchanged.
Economy apply_output_scaling(const Economy& economy, const std::string& sector,
                             double gamma);

// Labour coefficient vector with the target entry scaled by g in [0, 1];
// feed the result to wage_profit_prices. The technical matrix is untouched.
Vector apply_labour_saving(const Economy& economy, const std::string& sector,
                           double g, Units units = Units::dose);

// Economy extended by one sector per the spec. A luxury is a sector whose
// commodity enters no other sector's production.
Economy add_sector(const Economy& economy, const NewSectorSpec& spec);

// Result of applying an ordered scenario list. labour_multiplier holds
// the accumulated g factors per sector (1.0 when untouched); multiply
// into labour_coefficients before distribution solves.
struct AppliedScenarios {
  Economy economy;
  Vector labour_multiplier;
};

AppliedScenarios apply_scenarios(const Economy& economy,
                                 const std::vector<Scenario>& scenarios);

struct IncomeReport {
  Vector income;              // R times value of each sector's means of production
  Vector income_per_worker;
  Vector surplus;             // physical surplus Y_i in the solve's units
  double net_product_value = 0.0; // p . Y
};

// Income accounting at the uniform maximum profit rate.
IncomeReport sector_incomes(const Economy& economy, const EigenSolution& solution,
                            Units units = Units::dose);

}  // namespace econlab
