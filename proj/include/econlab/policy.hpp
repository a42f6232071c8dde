#pragma once

#include <optional>
#include <vector>

#include "econlab/economy.hpp"

namespace econlab {

// Relative tolerance shared between the static feasibility check and the
// exchange simulator, so boundary cases classify identically in both.
inline constexpr double kFeasTol = 1e-9;

// Exogenous or solved prices, one per sector, in physical units (value
// per physical unit of commodity). numeraire, when set, is the index of
// the sector whose price is normalized to 1.
struct PriceVector {
  Vector prices;
  std::optional<std::size_t> numeraire;

  // Value of one survival dose of commodity i.
  double dose_value(const Economy& economy, std::size_t i) const {
    return prices[i] * economy.sector(i).survival_dose;
  }

  // Rescale so that prices[num] * scale_unit == 1. scale_unit is the
  // survival dose when normalizing dose values, 1.0 for raw prices.
  static PriceVector normalized(Vector raw, std::size_t num, double scale_unit = 1.0);
};

struct ViabilityReport {
  std::vector<double> margins; // Q_i - F_i * (consumers of i), physical units
  std::vector<bool> viable_by_commodity;
  bool viable = false;
};

struct FeasibilityReport {
  double cost_per_worker = 0.0;    // M = sum over all commodities of p_j F_j
  Vector basket_cost;              // M_i: per worker of sector i, over its basket
  std::vector<double> slack;       // sigma_i = p_i Q_i - N_i M_i
  std::vector<bool> feasible_by_sector;
  std::vector<bool> tight;         // |sigma_i| within tolerance of zero
  std::vector<double> price_floor; // M_i N_i / Q_i, the Eq.-style lower bound
  bool feasible = false;
};

struct SectorRates {
  Vector r; // may be negative: the sector is being destroyed
  Vector s; // surplus rates, nonnegative
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Technical condition: each commodity is produced sufficiently for
// everybody who consumes it.
ViabilityReport check_viability(const Economy& economy);

// s_i = Q_i / (F_i * consumers_i) - 1; throws ValidationError when the
// economy is not viable (some s_i would be negative).
Vector surplus_rates(const Economy& economy);

// Admissible band for rho = (p_2 F_2)/(p_1 F_1) in a viable two-sector
// full-incidence economy: [N_2/(X_2 - N_2), (X_1 - N_1)/N_1].
Interval two_sector_band(const Economy& economy);

FeasibilityReport check_price_feasibility(const Economy& economy,
                                          const PriceVector& prices);

// Per-sector profit rates r_i = sigma_i / (N_i M_i) implied by exogenous
// prices, alongside the surplus rates.
SectorRates sector_profit_rates(const Economy& economy, const PriceVector& prices);

// sum_i n_i (1+r_i)/(1+s_i) - 1; an identity (~0) for rates derived from
// any positive price vector in a full-incidence economy.
double macro_identity_residual(const Economy& economy, const SectorRates& rates);

// Alternative form: sum_i (N_i F_i / Q_i)(1 + r_i) - 1.
double macro_identity_residual_alt(const Economy& economy, const SectorRates& rates);

// Prices making every sector's profit rate equal its surplus rate:
// p_i proportional to n_i / F_i, numeraire-normalized.
PriceVector policy_prices_r_eq_s(const Economy& economy, std::size_t numeraire = 0);

}  // namespace econlab
