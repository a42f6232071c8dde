#include <doctest.h>

#include <cmath>
#include <random>

#include "econlab/policy.hpp"
#include "support/economies.hpp"
#include "support/generators.hpp"

using namespace econlab;
using namespace econlab::testing;

TEST_CASE("viability margins") {
  const auto rep = check_viability(two_peasant()); // Q = (3F1, 2F2)
  CHECK(rep.viable);
  CHECK(rep.margins[0] == doctest::Approx(1.0)); // one spare bread dose
  CHECK(rep.margins[1] == doctest::Approx(0.0));

  // 50% overproduction only: no hope under any price system.
  const Economy half({{"a", 1, 1, 1.5}, {"b", 1, 1, 1.5}});
  const auto bad = check_viability(half);
  CHECK_FALSE(bad.viable);
  CHECK_FALSE(bad.viable_by_commodity[0]);
  CHECK_FALSE(bad.viable_by_commodity[1]);

  const auto boundary = check_viability(zero_surplus());
  CHECK(boundary.viable);
  CHECK(boundary.margins[0] == doctest::Approx(0.0));
  CHECK(boundary.margins[1] == doctest::Approx(0.0));
}

TEST_CASE("surplus rates") {
  const auto s4 = surplus_rates(three_peasant());
  CHECK(s4[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s4[1] == doctest::Approx(0.25).epsilon(1e-14));

  const auto s0 = surplus_rates(zero_surplus());
  CHECK(s0[0] == doctest::Approx(0.0));
  CHECK(s0[1] == doctest::Approx(0.0));

  const auto s2 = surplus_rates(two_peasant());
  CHECK(s2[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s2[1] == doctest::Approx(0.0));

  const Economy half({{"a", 1, 1, 1.5}, {"b", 1, 1, 1.5}});
  CHECK_THROWS_AS(surplus_rates(half), ValidationError);
}

TEST_CASE("two-sector admissible band") {
  const auto band = two_sector_band(two_peasant());
  CHECK(band.lo == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(band.hi == doctest::Approx(2.0).epsilon(1e-14));

  const auto band4 = two_sector_band(three_peasant());
  CHECK(band4.lo == doctest::Approx(4.0 / 11.0).epsilon(1e-14));
  CHECK(band4.hi == doctest::Approx(5.0 / 4.0).epsilon(1e-14));

  const auto point = two_sector_band(zero_surplus());
  CHECK(point.lo == doctest::Approx(1.0));
  CHECK(point.hi == doctest::Approx(1.0));

  CHECK_THROWS_AS(two_sector_band(iron()), ValidationError);
}

TEST_CASE("price feasibility on the three-peasant economy") {
  const Economy econ = three_peasant();

  // r = s policy prices: dose-value ratio 1/2.
  const auto ok = check_price_feasibility(econ, PriceVector{{1.0, 0.5}, {}});
  CHECK(ok.feasible);

  // rho = 2 exceeds the upper bound 5/4: the farmers starve.
  const auto bad = check_price_feasibility(econ, PriceVector{{1.0, 2.0}, {}});
  CHECK_FALSE(bad.feasible);
  CHECK(bad.slack[0] < 0.0);
  CHECK(bad.slack[1] >= 0.0);
  CHECK_FALSE(bad.feasible_by_sector[0]);

  // Zero surplus: the sole possible prices, all slack exactly zero.
  const Economy zs = zero_surplus();
  Vector p;
  for (const auto& s : zs.sectors()) p.push_back(s.population / s.output);
  const auto tightrep = check_price_feasibility(zs, PriceVector{p, {}});
  CHECK(tightrep.feasible);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(tightrep.slack[i] == doctest::Approx(0.0));
    CHECK(tightrep.tight[i]);
  }
}

TEST_CASE("sector profit rates") {
  const Economy econ = three_peasant();

  // Natural prices (dose ratio 3/5) give the uniform rate 13/32.
  const auto uniform =
      sector_profit_rates(econ, PriceVector{{1.0, 3.0 / 5.0}, {}});
  CHECK(uniform.r[0] == doctest::Approx(13.0 / 32.0).epsilon(1e-12));
  CHECK(uniform.r[1] == doctest::Approx(13.0 / 32.0).epsilon(1e-12));

  // r = s policy prices.
  const auto rs = sector_profit_rates(econ, PriceVector{{1.0, 0.5}, {}});
  CHECK(rs.r[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rs.r[1] == doctest::Approx(0.25).epsilon(1e-12));

  // p_i = N_i M / Q_i exactly: zero rates.
  const Economy zs = zero_surplus();
  Vector p;
  for (const auto& s : zs.sectors()) p.push_back(s.population / s.output);
  const auto zero = sector_profit_rates(zs, PriceVector{p, {}});
  CHECK(zero.r[0] == doctest::Approx(0.0));
  CHECK(zero.r[1] == doctest::Approx(0.0));
}

TEST_CASE("macro identity holds for any positive prices") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Economy econ = random_viable_economy(rng);
    const auto pv = random_positive_prices(rng, econ.size());
    const auto rates = sector_profit_rates(econ, pv);
    CHECK(std::abs(macro_identity_residual(econ, rates)) <= 1e-12);
    CHECK(std::abs(macro_identity_residual_alt(econ, rates)) <= 1e-12);
  }
}

TEST_CASE("macro identity: uniform rate pins 1+R") {
  const Economy econ = three_peasant();
  // Uniform r = R requires 1+R = 1 / sum(N_i F_i / Q_i) = 45/32.
  double denom = 0.0;
  for (const auto& s : econ.sectors())
    denom += s.population * s.survival_dose / s.output;
  CHECK(1.0 / denom - 1.0 == doctest::Approx(13.0 / 32.0).epsilon(1e-14));

  const auto rates = sector_profit_rates(econ, PriceVector{{1.0, 0.6}, {}});
  CHECK(rates.r[0] == doctest::Approx(rates.r[1]).epsilon(1e-12));
}

TEST_CASE("r = s policy prices") {
  const auto pv = policy_prices_r_eq_s(three_peasant());
  const Economy econ = three_peasant();
  CHECK(pv.prices[0] == 1.0);
  const double rho = pv.dose_value(econ, 1) / pv.dose_value(econ, 0);
  CHECK(rho == doctest::Approx(0.5).epsilon(1e-14));

  // Equal populations: all dose values equal.
  const Economy eq({{"a", 2, 1.5, 12}, {"b", 2, 0.5, 3}});
  const auto pe = policy_prices_r_eq_s(eq);
  CHECK(pe.dose_value(eq, 0) == doctest::Approx(pe.dose_value(eq, 1)).epsilon(1e-14));

  // N = (3, 1): dose-value ratio n2/n1 = 1/3.
  const Economy uneven({{"a", 3, 1, 8}, {"b", 1, 1, 8}});
  const auto pu = policy_prices_r_eq_s(uneven);
  CHECK(pu.dose_value(uneven, 1) / pu.dose_value(uneven, 0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("property: band membership matches feasibility verdict") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const Economy econ = random_viable_economy(rng, 2, 2);
    const auto band = two_sector_band(econ);
    for (double rho : {band.lo * 0.5, band.lo * 0.999999, band.lo, band.lo * 1.000001,
                       0.5 * (band.lo + band.hi), band.hi * 0.999999, band.hi,
                       band.hi * 1.000001, band.hi * 2.0 + jitter(rng)}) {
      const double f1 = econ.sector(0).survival_dose;
      const double f2 = econ.sector(1).survival_dose;
      const PriceVector pv{{1.0 / f1, rho / f2}, {}};
      const bool inside = band.contains(rho);
      const bool feasible = check_price_feasibility(econ, pv).feasible;
      // The shared tolerance blurs the boundary itself; skip exact edges.
      if (std::abs(rho - band.lo) > 1e-6 * band.lo &&
          std::abs(rho - band.hi) > 1e-6 * band.hi)
        CHECK(inside == feasible);
    }
  }
}

TEST_CASE("property: feasible cone is nonempty iff sum N_i F_i / Q_i <= 1") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Economy econ = random_viable_economy(rng);
    double mass = 0.0;
    Vector witness;
    for (const auto& s : econ.sectors()) {
      mass += s.population * s.survival_dose / s.output;
      witness.push_back(s.population / s.output);
    }
    CHECK(mass <= 1.0 + 1e-12); // viable economies satisfy the bound
    CHECK(check_price_feasibility(econ, PriceVector{witness, {}}).feasible);
  }
  // Conversely, a non-viable economy (mass > 1) admits no feasible prices.
  const Economy half({{"a", 1, 1, 1.5}, {"b", 1, 1, 1.5}});
  std::uniform_real_distribution<double> price(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const PriceVector pv{{price(rng), price(rng)}, {}};
    CHECK_FALSE(check_price_feasibility(half, pv).feasible);
  }
}

TEST_CASE("property: profit-rate sign matches slack sign per sector") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Economy econ = random_viable_economy(rng);
    const auto pv = random_positive_prices(rng, econ.size());
    const auto rep = check_price_feasibility(econ, pv);
    const auto rates = sector_profit_rates(econ, pv);
    for (std::size_t i = 0; i < econ.size(); ++i)
      CHECK((rates.r[i] >= 0.0) == (rep.slack[i] >= 0.0));
  }
}

TEST_CASE("two-peasant slack reduces to revenue-covers-costs") {
  // For N_i = 1 the slack is p_i Q_i - (p_1 F_1 + p_2 F_2).
  const Economy econ = two_peasant();
  const PriceVector pv{{1.2, 0.9}, {}};
  const auto rep = check_price_feasibility(econ, pv);
  CHECK(rep.slack[0] ==
        doctest::Approx(1.2 * 3 - (1.2 + 0.9)).epsilon(1e-14));
  CHECK(rep.slack[1] ==
        doctest::Approx(0.9 * 2 - (1.2 + 0.9)).epsilon(1e-14));
}
