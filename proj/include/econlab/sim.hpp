#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "econlab/economy.hpp"
#include "econlab/policy.hpp"

namespace econlab {

// closed: sales limited by surviving internal demand; open: the whole
// surplus is sold to an outside buyer at the given prices.
enum class SimMode { closed, open };

struct SimConfig {
  SimMode mode = SimMode::closed;
  std::uint64_t periods = 1;
  Vector initial_savings; // value units, one per sector, >= 0
  PriceVector prices;
};

struct PeriodRecord {
  std::uint64_t period = 0; // 1-based
  std::size_t sector = 0;
  double revenue = 0.0;
  double basket_cost = 0.0;
  double savings_after = 0.0;
};

struct CollapseEvent {
  std::size_t sector = 0;
  std::uint64_t period = 0;
};

enum class SimOutcome { steady, collapsed };

struct SimTrajectory {
  std::vector<PeriodRecord> records; // survivors only, period-major
  std::vector<CollapseEvent> events;
  SimOutcome outcome = SimOutcome::steady;
};

// Deterministic period ledger: all sales settle before all purchases; a
// sector that cannot cover its basket from savings plus revenue collapses
// and drops out of the next period's supply and demand.
SimTrajectory simulate(const Economy& economy, const SimConfig& config);

struct CollapseSummary {
  // 0 means the sector never collapses within the horizon.
  std::vector<std::uint64_t> collapse_period;
  SimOutcome outcome = SimOutcome::steady;
};

// Runs the ledger until every surviving sector has nonnegative flux (or
// the cap is hit) and reports the first collapse period per sector.
CollapseSummary time_to_collapse(const Economy& economy, const PriceVector& prices,
                                 const Vector& initial_savings, SimMode mode = SimMode::closed,
                                 std::uint64_t max_periods = 1'000'000);

}  // namespace econlab
