#include "econlab/policy.hpp"

#include <cmath>

namespace econlab {

PriceVector PriceVector::normalized(Vector raw, std::size_t num, double scale_unit) {
  const double ref = raw[num] * scale_unit;
  if (!(ref > 0.0)) throw ValidationError("numeraire price must be positive");
  for (double& p : raw) p /= ref;
  return PriceVector{std::move(raw), num};
}

static void require_positive_prices(const Economy& economy, const PriceVector& pv) {
  if (pv.prices.size() != economy.size())
    throw ValidationError("price vector length must equal sector count");
  for (double p : pv.prices)
    if (!(p > 0.0)) throw ValidationError("prices must be positive");
}

ViabilityReport check_viability(const Economy& economy) {
  ViabilityReport rep;
  rep.viable = true;
  for (std::size_t i = 0; i < economy.size(); ++i) {
    const auto& s = economy.sector(i);
    const double margin = s.output - s.survival_dose * economy.consumers_of(i);
    rep.margins.push_back(margin);
    rep.viable_by_commodity.push_back(margin >= 0.0);
    rep.viable = rep.viable && margin >= 0.0;
  }
  return rep;
}

Vector surplus_rates(const Economy& economy) {
  const auto via = check_viability(economy);
  if (!via.viable)
    throw ValidationError("surplus rates undefined for a non-viable economy");
  Vector s(economy.size());
  for (std::size_t i = 0; i < economy.size(); ++i) {
    const auto& sec = economy.sector(i);
    s[i] = sec.output / (sec.survival_dose * economy.consumers_of(i)) - 1.0;
  }
  return s;
}

Interval two_sector_band(const Economy& economy) {
  if (economy.size() != 2)
    throw ValidationError("price band is defined for exactly 2 sectors");
  if (!economy.full_incidence())
    throw ValidationError("price band requires full incidence");
  if (!check_viability(economy).viable)
    throw ValidationError("price band requires a viable economy");

  const double n1 = economy.sector(0).population;
  const double n2 = economy.sector(1).population;
  const double x1 = economy.sector(0).doses();
  const double x2 = economy.sector(1).doses();
  if (x1 <= n1 || x2 <= n2)
    throw ValidationError("price band degenerate: sector output does not exceed own need");
  return Interval{n2 / (x2 - n2), (x1 - n1) / n1};
}

FeasibilityReport check_price_feasibility(const Economy& economy,
                                          const PriceVector& prices) {
  require_positive_prices(economy, prices);
  FeasibilityReport rep;
  const std::size_t n = economy.size();

  for (std::size_t j = 0; j < n; ++j)
    rep.cost_per_worker += prices.prices[j] * economy.sector(j).survival_dose;

  rep.feasible = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = economy.sector(i);
    double m = 0.0; // basket of a sector-i worker
    for (std::size_t j = 0; j < n; ++j)
      if (economy.uses(j, i)) m += prices.prices[j] * economy.sector(j).survival_dose;
    rep.basket_cost.push_back(m);
    const double sigma = prices.prices[i] * s.output - s.population * m;
    const double tol = kFeasTol * s.population * m;
    rep.slack.push_back(sigma);
    rep.feasible_by_sector.push_back(sigma >= -tol);
    rep.tight.push_back(std::abs(sigma) <= tol);
    rep.price_floor.push_back(m * s.population / s.output);
    rep.feasible = rep.feasible && sigma >= -tol;
  }
  return rep;
}

SectorRates sector_profit_rates(const Economy& economy, const PriceVector& prices) {
  const auto rep = check_price_feasibility(economy, prices);
  SectorRates rates;
  rates.s = surplus_rates(economy);
  for (std::size_t i = 0; i < economy.size(); ++i) {
    const auto& s = economy.sector(i);
    rates.r.push_back(rep.slack[i] / (s.population * rep.basket_cost[i]));
  }
  return rates;
}

double macro_identity_residual(const Economy& economy, const SectorRates& rates) {
  double sum = 0.0;
  for (std::size_t i = 0; i < economy.size(); ++i)
    sum += economy.population_share(i) * (1.0 + rates.r[i]) / (1.0 + rates.s[i]);
  return sum - 1.0;
}

double macro_identity_residual_alt(const Economy& economy, const SectorRates& rates) {
  double sum = 0.0;
  for (std::size_t i = 0; i < economy.size(); ++i) {
    const auto& s = economy.sector(i);
    sum += s.population * s.survival_dose / s.output * (1.0 + rates.r[i]);
  }
  return sum - 1.0;
}

PriceVector policy_prices_r_eq_s(const Economy& economy, std::size_t numeraire) {
  if (!economy.full_incidence())
    throw ValidationError("r=s policy prices require full incidence");
  if (!check_viability(economy).viable)
    throw ValidationError("r=s policy prices require a viable economy");
  Vector p(economy.size());
  for (std::size_t i = 0; i < economy.size(); ++i) {
    const auto& s = economy.sector(i);
    p[i] = economy.population_share(i) / s.survival_dose;
  }
  return PriceVector::normalized(std::move(p), numeraire);
}

}  // namespace econlab
