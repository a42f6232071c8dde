#include "econlab/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace econlab {

Economy apply_output_scaling(const Economy& economy, const std::string& sector,
                             double gamma) {
  if (!(gamma >= 1.0)) throw ValidationError("output scaling requires gamma >= 1");
  auto sectors = economy.sectors();
  sectors[economy.index_of(sector)].output *= gamma;
  return Economy(std::move(sectors),
                 economy.full_incidence() ? std::nullopt
                                          : std::optional<Incidence>(economy.incidence()));
}

Vector apply_labour_saving(const Economy& economy, const std::string& sector,
                           double g, Units units) {
  if (!(g >= 0.0 && g <= 1.0)) throw ValidationError("labour saving requires g in [0, 1]");
  Vector a = labour_coefficients(economy, units);
  a[economy.index_of(sector)] *= g;
  return a;
}

Economy add_sector(const Economy& economy, const NewSectorSpec& spec) {
  if (!(spec.output > 0.0)) throw ValidationError("new sector needs positive output");
  const std::size_t n = economy.size();

  auto sectors = economy.sectors();
  sectors.push_back(Sector{spec.name, spec.population, spec.survival_dose, spec.output});

  Incidence b = economy.incidence();
  for (auto& row : b) row.push_back(false);
  b.emplace_back(n + 1, false);

  // Column: what the new sector's workers consume.
  if (spec.inputs.empty()) {
    for (std::size_t i = 0; i < n; ++i) b[i][n] = true;
  } else {
    for (const auto& name : spec.inputs) b[economy.index_of(name)][n] = true;
  }
  // Row: which existing sectors consume the new commodity.
  for (const auto& name : spec.consumers) b[n][economy.index_of(name)] = true;
  if (spec.consumes_own) b[n][n] = true;

  return Economy(std::move(sectors), std::move(b));
}

AppliedScenarios apply_scenarios(const Economy& economy,
                                 const std::vector<Scenario>& scenarios) {
  AppliedScenarios out{economy, Vector(economy.size(), 1.0)};
  for (const auto& sc : scenarios) {
    switch (sc.kind) {
      case ScenarioKind::output_scaling:
        out.economy = apply_output_scaling(out.economy, sc.target, sc.gamma);
        break;
      case ScenarioKind::labour_saving:
        if (!(sc.g >= 0.0 && sc.g <= 1.0))
          throw ValidationError("labour saving requires g in [0, 1]");
        out.labour_multiplier[out.economy.index_of(sc.target)] *= sc.g;
        break;
      case ScenarioKind::add_luxury:
      case ScenarioKind::add_input_sector: {
        NewSectorSpec spec = sc.new_sector;
        if (sc.kind == ScenarioKind::add_luxury) spec.consumers.clear();
        out.economy = add_sector(out.economy, spec);
        out.labour_multiplier.push_back(1.0);
        break;
      }
    }
  }
  return out;
}

IncomeReport sector_incomes(const Economy& economy, const EigenSolution& solution,
                            Units units) {
  const Matrix a = build_input_matrix(economy, units).entries;
  const std::size_t n = economy.size();
  const Vector& p = solution.prices;

  Vector outputs(n);
  for (std::size_t i = 0; i < n; ++i)
    outputs[i] = units == Units::physical ? economy.sector(i).output
                                          : economy.sector(i).doses();

  IncomeReport rep;
  const Vector unit_cost = left_multiply(p, a); // value of means per unit output
  const Vector used = right_multiply(a, outputs);
  for (std::size_t i = 0; i < n; ++i) {
    rep.income.push_back(solution.R * unit_cost[i] * outputs[i]);
    rep.income_per_worker.push_back(rep.income[i] / economy.sector(i).population);
    rep.surplus.push_back(outputs[i] - used[i]);
    rep.net_product_value += p[i] * rep.surplus[i];
  }
  return rep;
}

}  // namespace econlab
