#include "econlab/sim.hpp"

#include <algorithm>
#include <cmath>

namespace econlab {

namespace {

struct Ledger {
  const Economy& economy;
  const PriceVector& prices;
  SimMode mode;
  std::vector<bool> alive;
  Vector savings;

  // One settlement round; returns the sectors that collapsed this period.
  std::vector<std::size_t> step(std::uint64_t period, SimTrajectory* traj) {
    const std::size_t n = economy.size();
    Vector revenue(n, 0.0), cost(n, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      const auto& s = economy.sector(i);
      const double own_use =
          economy.uses(i, i) ? s.population * s.survival_dose : 0.0;
      const double supply = s.output - own_use;
      double demand = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && alive[j] && economy.uses(i, j))
          demand += economy.sector(j).population * s.survival_dose;
      const double sales = mode == SimMode::open ? supply : std::min(supply, demand);
      revenue[i] = prices.prices[i] * sales;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && alive[j] && economy.uses(j, i))
          cost[i] += prices.prices[j] * economy.sector(j).survival_dose;
      cost[i] *= s.population;
    }

    // All sales precede all purchases; collapse decisions are simultaneous.
    std::vector<std::size_t> collapsed;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      const double budget = savings[i] + revenue[i];
      if (budget < cost[i] * (1.0 - kFeasTol)) {
        collapsed.push_back(i);
        if (traj) traj->events.push_back(CollapseEvent{i, period});
        continue;
      }
      savings[i] = budget - cost[i];
      if (savings[i] < 0.0) savings[i] = 0.0; // tolerance-level residue
      if (traj)
        traj->records.push_back(
            PeriodRecord{period, i, revenue[i], cost[i], savings[i]});
    }
    for (std::size_t i : collapsed) alive[i] = false;
    return collapsed;
  }

  // True when every surviving sector's per-period flux is nonnegative.
  bool steady() const {
    const std::size_t n = economy.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      const auto& s = economy.sector(i);
      const double own_use =
          economy.uses(i, i) ? s.population * s.survival_dose : 0.0;
      const double supply = s.output - own_use;
      double demand = 0.0, cost = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !alive[j]) continue;
        if (economy.uses(i, j))
          demand += economy.sector(j).population * s.survival_dose;
        if (economy.uses(j, i))
          cost += prices.prices[j] * economy.sector(j).survival_dose;
      }
      cost *= s.population;
      const double sales = mode == SimMode::open ? supply : std::min(supply, demand);
      if (prices.prices[i] * sales < cost * (1.0 - kFeasTol)) return false;
    }
    return true;
  }
};

Ledger make_ledger(const Economy& economy, const PriceVector& prices, SimMode mode,
                   const Vector& initial_savings) {
  if (prices.prices.size() != economy.size())
    throw ValidationError("price vector length must equal sector count");
  for (double p : prices.prices)
    if (!(p > 0.0)) throw ValidationError("prices must be positive");
  if (initial_savings.size() != economy.size())
    throw ValidationError("savings vector length must equal sector count");
  for (double s : initial_savings)
    if (s < 0.0) throw ValidationError("savings must be nonnegative");
  return Ledger{economy, prices, mode,
                std::vector<bool>(economy.size(), true), initial_savings};
}

}  // namespace

SimTrajectory simulate(const Economy& economy, const SimConfig& config) {
  if (config.periods < 1) throw ValidationError("periods must be >= 1");
  Ledger ledger = make_ledger(economy, config.prices, config.mode,
                              config.initial_savings);
  SimTrajectory traj;
  for (std::uint64_t t = 1; t <= config.periods; ++t) {
    ledger.step(t, &traj);
    if (std::none_of(ledger.alive.begin(), ledger.alive.end(),
                     [](bool b) { return b; }))
      break;
  }
  traj.outcome = traj.events.empty() ? SimOutcome::steady : SimOutcome::collapsed;
  return traj;
}

CollapseSummary time_to_collapse(const Economy& economy, const PriceVector& prices,
                                 const Vector& initial_savings, SimMode mode,
                                 std::uint64_t max_periods) {
  Ledger ledger = make_ledger(economy, prices, mode, initial_savings);
  CollapseSummary summary;
  summary.collapse_period.assign(economy.size(), 0);
  for (std::uint64_t t = 1; t <= max_periods; ++t) {
    SimTrajectory scratch;
    for (std::size_t i : ledger.step(t, &scratch)) summary.collapse_period[i] = t;
    if (std::none_of(ledger.alive.begin(), ledger.alive.end(),
                     [](bool b) { return b; }))
      break;
    if (ledger.steady()) break;
  }
  summary.outcome = std::all_of(summary.collapse_period.begin(),
                                summary.collapse_period.end(),
                                [](std::uint64_t p) { return p == 0; })
                        ? SimOutcome::steady
                        : SimOutcome::collapsed;
  return summary;
}

}  // namespace econlab
