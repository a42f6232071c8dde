#include "econlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "econlab/natural.hpp"

namespace econlab {

namespace {

using nlohmann::json;

// Fixed 12-significant-digit formatting keeps JSON output byte-stable.
json jnum(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return json(std::strtod(buf, nullptr));
}

json jvec(const Vector& v) {
  json a = json::array();
  for (double x : v) a.push_back(jnum(x));
  return a;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

struct Context {
  const ScenarioFile& file;
  const RunOptions& opts;
  Units units;
  std::size_t numeraire;
};

PriceVector required_prices(const Context& ctx) {
  if (!ctx.file.prices)
    throw ValidationError("this command needs a prices block in the scenario file");
  return resolve_prices(ctx.file.economy, *ctx.file.prices);
}

// Price of one reporting unit of commodity i (a dose by default).
double reported_price(const Economy& econ, const PriceVector& pv, std::size_t i,
                      Units units) {
  return units == Units::dose ? pv.dose_value(econ, i) : pv.prices[i];
}

RunResult cmd_viability(const Context& ctx) {
  const Economy& econ = ctx.file.economy;
  const auto rep = check_viability(econ);
  json doc{{"command", "viability"}, {"viable", rep.viable}};
  json rows = json::array();
  std::ostringstream table;
  table << "sector        margin  viable\n";
  for (std::size_t i = 0; i < econ.size(); ++i) {
    const double margin = ctx.units == Units::dose
                              ? rep.margins[i] / econ.sector(i).survival_dose
                              : rep.margins[i];
    rows.push_back({{"name", econ.sector(i).name},
                    {"margin", jnum(margin)},
                    {"viable", (bool)rep.viable_by_commodity[i]}});
    table << econ.sector(i).name << "  " << fmt(margin) << "  "
          << (rep.viable_by_commodity[i] ? "yes" : "NO") << "\n";
  }
  doc["sectors"] = std::move(rows);
  table << (rep.viable ? "economy viable\n" : "economy NOT viable\n");
  return RunResult{rep.viable ? 0 : 2,
                   ctx.opts.json ? render(doc) : table.str()};
}

RunResult cmd_band(const Context& ctx) {
  const Interval band = two_sector_band(ctx.file.economy);
  json doc{{"command", "band"}, {"lo", jnum(band.lo)}, {"hi", jnum(band.hi)}};
  std::ostringstream table;
  table << "admissible dose-value ratio p2F2/(p1F1): [" << fmt(band.lo) << ", "
        << fmt(band.hi) << "]\n";
  return RunResult{0, ctx.opts.json ? render(doc) : table.str()};
}

RunResult cmd_feasible(const Context& ctx) {
  const Economy& econ = ctx.file.economy;
  const PriceVector pv = required_prices(ctx);
  const auto rep = check_price_feasibility(econ, pv);
  json doc{{"command", "feasible"},
           {"feasible", rep.feasible},
           {"cost_per_worker", jnum(rep.cost_per_worker)}};
  json rows = json::array();
  std::ostringstream table;
  table << "cost per worker M = " << fmt(rep.cost_per_worker) << "\n";
  table << "sector        price  slack  floor  verdict\n";
  for (std::size_t i = 0; i < econ.size(); ++i) {
    const double price = reported_price(econ, pv, i, ctx.units);
    const double floor = ctx.units == Units::dose
                             ? rep.price_floor[i] * econ.sector(i).survival_dose
                             : rep.price_floor[i];
    rows.push_back({{"name", econ.sector(i).name},
                    {"price", jnum(price)},
                    {"slack", jnum(rep.slack[i])},
                    {"price_floor", jnum(floor)},
                    {"feasible", (bool)rep.feasible_by_sector[i]},
                    {"tight", (bool)rep.tight[i]}});
    table << econ.sector(i).name << "  " << fmt(price) << "  "
          << fmt(rep.slack[i]) << "  " << fmt(floor) << "  "
          << (rep.feasible_by_sector[i] ? (rep.tight[i] ? "tight" : "ok")
                                        : "starves")
          << "\n";
  }
  doc["sectors"] = std::move(rows);
  return RunResult{rep.feasible ? 0 : 2,
                   ctx.opts.json ? render(doc) : table.str()};
}

RunResult cmd_rates(const Context& ctx) {
  const Economy& econ = ctx.file.economy;
  const PriceVector pv = required_prices(ctx);
  const auto rep = check_price_feasibility(econ, pv);
  const auto rates = sector_profit_rates(econ, pv);
  json doc{{"command", "rates"},
           {"feasible", rep.feasible},
           {"macro_residual", jnum(macro_identity_residual(econ, rates))},
           {"macro_residual_alt", jnum(macro_identity_residual_alt(econ, rates))}};
  json rows = json::array();
  std::ostringstream table;
  table << "sector        r  s  verdict\n";
  for (std::size_t i = 0; i < econ.size(); ++i) {
    rows.push_back({{"name", econ.sector(i).name},
                    {"r", jnum(rates.r[i])},
                    {"s", jnum(rates.s[i])},
                    {"destroyed", rates.r[i] < 0.0 && !rep.feasible_by_sector[i]}});
    table << econ.sector(i).name << "  " << fmt(rates.r[i]) << "  "
          << fmt(rates.s[i]) << "  "
          << (rep.feasible_by_sector[i] ? "ok" : "destroyed") << "\n";
  }
  doc["sectors"] = std::move(rows);
  return RunResult{rep.feasible ? 0 : 2,
                   ctx.opts.json ? render(doc) : table.str()};
}

json basics_json(const Economy& econ, const BasicsPartition& part) {
  json basic = json::array(), non_basic = json::array();
  for (std::size_t i : part.basic) basic.push_back(econ.sector(i).name);
  for (std::size_t i : part.non_basic) non_basic.push_back(econ.sector(i).name);
  return {{"basic", std::move(basic)}, {"non_basic", std::move(non_basic)}};
}

json eigen_json(const Economy& econ, const EigenSolution& sol, const char* command) {
  json doc{{"command", command},
           {"lambda", jnum(sol.lambda)},
           {"R", jnum(sol.R)},
           {"numeraire", econ.sector(sol.numeraire).name},
           {"iterations", sol.iterations},
           {"residual", jnum(sol.residual)}};
  json rows = json::array();
  for (std::size_t i = 0; i < econ.size(); ++i)
    rows.push_back({{"name", econ.sector(i).name}, {"price", jnum(sol.prices[i])}});
  doc["prices"] = std::move(rows);
  return doc;
}

RunResult infeasible_result(const Context& ctx, const char* command,
                            const NonBasicInfeasibleError& e) {
  json doc{{"command", command},
           {"error", "non-basic infeasible"},
           {"sector", e.sector()}};
  return RunResult{2, ctx.opts.json ? render(doc)
                                    : std::string(e.what()) + "\n"};
}

RunResult cmd_natural(const Context& ctx) {
  const Economy& econ = ctx.file.economy;
  const auto part = classify_basics(build_input_matrix(econ, ctx.units));
  EigenSolution sol;
  try {
    sol = natural_prices(econ, ctx.numeraire, ctx.units, ctx.opts.tol);
  } catch (const NonBasicInfeasibleError& e) {
    return infeasible_result(ctx, "natural", e);
  }
  json doc = eigen_json(econ, sol, "natural");
  doc["basics"] = basics_json(econ, part);
  std::ostringstream table;
  table << "lambda = " << fmt(sol.lambda) << "  R = " << fmt(sol.R) << "\n";
  table << "sector        price\n";
  for (std::size_t i = 0; i < econ.size(); ++i)
    table << econ.sector(i).name << "  " << fmt(sol.prices[i]) << "\n";
  return RunResult{0, ctx.opts.json ? render(doc) : table.str()};
}

RunResult cmd_distribution(const Context& ctx) {
  const Economy& econ = ctx.file.economy;
  const EigenSolution eig =
      natural_prices(econ, ctx.numeraire, ctx.units, ctx.opts.tol);
  double lo = 0.0, hi = eig.R;
  std::size_t points = 11;
  if (ctx.opts.r_grid) {
    if (std::sscanf(ctx.opts.r_grid->c_str(), "%lf:%lf:%zu", &lo, &hi, &points) != 3 ||
        points < 1)
      throw ValidationError("--r-grid must be a:b:n with n >= 1");
  }
  json rows = json::array();
  std::ostringstream table;
  table << "r  w  prices...\n";
  for (std::size_t k = 0; k < points; ++k) {
    const double r =
        points == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / (points - 1);
    const auto sol = wage_profit_prices(econ, r, ctx.numeraire, ctx.units);
    rows.push_back(
        {{"r", jnum(sol.r)}, {"w", jnum(sol.w)}, {"prices", jvec(sol.prices)}});
    table << fmt(sol.r) << "  " << fmt(sol.w);
    for (double p : sol.prices) table << "  " << fmt(p);
    table << "\n";
  }
  json doc{{"command", "distribution"}, {"R", jnum(eig.R)}, {"points", std::move(rows)}};
  return RunResult{0, ctx.opts.json ? render(doc) : table.str()};
}

RunResult cmd_scenario(const Context& ctx) {
  const auto applied = apply_scenarios(ctx.file.economy, ctx.file.scenarios);
  const Economy& econ = applied.economy;
  EigenSolution sol;
  try {
    sol = natural_prices(econ, ctx.numeraire, ctx.units, ctx.opts.tol);
  } catch (const NonBasicInfeasibleError& e) {
    return infeasible_result(ctx, "scenario", e);
  }
  const auto incomes = sector_incomes(econ, sol, ctx.units);
  json doc = eigen_json(econ, sol, "scenario");
  doc["net_product_value"] = jnum(incomes.net_product_value);
  json rows = json::array();
  std::ostringstream table;
  table << "R = " << fmt(sol.R) << "  p.Y = " << fmt(incomes.net_product_value)
        << "\n";
  table << "sector        price  income  income/worker  surplus\n";
  for (std::size_t i = 0; i < econ.size(); ++i) {
    rows.push_back({{"name", econ.sector(i).name},
                    {"income", jnum(incomes.income[i])},
                    {"income_per_worker", jnum(incomes.income_per_worker[i])},
                    {"surplus", jnum(incomes.surplus[i])}});
    table << econ.sector(i).name << "  " << fmt(sol.prices[i]) << "  "
          << fmt(incomes.income[i]) << "  " << fmt(incomes.income_per_worker[i])
          << "  " << fmt(incomes.surplus[i]) << "\n";
  }
  doc["incomes"] = std::move(rows);
  return RunResult{0, ctx.opts.json ? render(doc) : table.str()};
}

RunResult cmd_simulate(const Context& ctx) {
  const Economy& econ = ctx.file.economy;
  if (!ctx.file.sim)
    throw ValidationError("simulate needs a sim block in the scenario file");
  SimConfig config;
  config.mode = ctx.file.sim->mode;
  config.periods = ctx.file.sim->periods;
  config.initial_savings = ctx.file.sim->savings;
  config.prices = required_prices(ctx);
  const auto traj = simulate(econ, config);
  const bool steady = traj.outcome == SimOutcome::steady;

  if (ctx.opts.csv) {
    std::ostringstream csv;
    csv << "period,sector,revenue,cost,savings,event\n";
    char buf[160];
    for (const auto& rec : traj.records) {
      std::snprintf(buf, sizeof buf, "%llu,%s,%.12g,%.12g,%.12g,\n",
                    (unsigned long long)rec.period,
                    econ.sector(rec.sector).name.c_str(), rec.revenue,
                    rec.basket_cost, rec.savings_after);
      csv << buf;
    }
    for (const auto& ev : traj.events) {
      std::snprintf(buf, sizeof buf, "%llu,%s,,,,collapse\n",
                    (unsigned long long)ev.period,
                    econ.sector(ev.sector).name.c_str());
      csv << buf;
    }
    return RunResult{steady ? 0 : 2, csv.str()};
  }

  json doc{{"command", "simulate"}, {"outcome", steady ? "steady" : "collapsed"}};
  json records = json::array(), events = json::array();
  std::ostringstream table;
  table << "period  sector        revenue  cost  savings\n";
  for (const auto& rec : traj.records) {
    records.push_back({{"period", rec.period},
                       {"sector", econ.sector(rec.sector).name},
                       {"revenue", jnum(rec.revenue)},
                       {"basket_cost", jnum(rec.basket_cost)},
                       {"savings", jnum(rec.savings_after)}});
    table << rec.period << "  " << econ.sector(rec.sector).name << "  "
          << fmt(rec.revenue) << "  " << fmt(rec.basket_cost) << "  "
          << fmt(rec.savings_after) << "\n";
  }
  for (const auto& ev : traj.events) {
    events.push_back({{"period", ev.period}, {"sector", econ.sector(ev.sector).name}});
    table << ev.period << "  " << econ.sector(ev.sector).name << "  COLLAPSE\n";
  }
  doc["records"] = std::move(records);
  doc["events"] = std::move(events);
  table << (steady ? "outcome: steady\n" : "outcome: collapsed\n");
  return RunResult{steady ? 0 : 2, ctx.opts.json ? render(doc) : table.str()};
}

RunResult cmd_quantities(const Context& ctx) {
  const Economy& econ = ctx.file.economy;
  const Matrix a = build_input_matrix(econ, ctx.units).entries;

  Vector surplus;
  if (ctx.file.surplus) {
    surplus = *ctx.file.surplus;
  } else {
    // Surplus implied by the declared outputs.
    Vector outputs(econ.size());
    for (std::size_t i = 0; i < econ.size(); ++i)
      outputs[i] = ctx.units == Units::dose ? econ.sector(i).doses()
                                            : econ.sector(i).output;
    const Vector used = right_multiply(a, outputs);
    for (std::size_t i = 0; i < econ.size(); ++i)
      surplus.push_back(outputs[i] - used[i]);
  }

  QuantitySolution sol;
  try {
    sol = quantity_system(a, surplus);
  } catch (const ValidationError& e) {
    json doc{{"command", "quantities"}, {"error", e.what()}};
    return RunResult{2, ctx.opts.json ? render(doc)
                                      : std::string(e.what()) + "\n"};
  }
  json rows = json::array();
  std::ostringstream table;
  table << "sector        surplus  gross_output\n";
  for (std::size_t i = 0; i < econ.size(); ++i) {
    rows.push_back({{"name", econ.sector(i).name},
                    {"surplus", jnum(surplus[i])},
                    {"gross_output", jnum(sol.gross_output[i])}});
    table << econ.sector(i).name << "  " << fmt(surplus[i]) << "  "
          << fmt(sol.gross_output[i]) << "\n";
  }
  json doc{{"command", "quantities"},
           {"residual", jnum(sol.residual)},
           {"sectors", std::move(rows)}};
  return RunResult{0, ctx.opts.json ? render(doc) : table.str()};
}

}  // namespace

RunResult run_command(const std::string& command, const ScenarioFile& file,
                      const RunOptions& opts) {
  Context ctx{file, opts, opts.physical ? Units::physical : Units::dose,
              opts.numeraire ? file.economy.index_of(*opts.numeraire) : 0};
  if (command == "viability") return cmd_viability(ctx);
  if (command == "band") return cmd_band(ctx);
  if (command == "feasible") return cmd_feasible(ctx);
  if (command == "rates") return cmd_rates(ctx);
  if (command == "natural") return cmd_natural(ctx);
  if (command == "distribution") return cmd_distribution(ctx);
  if (command == "scenario") return cmd_scenario(ctx);
  if (command == "simulate") return cmd_simulate(ctx);
  if (command == "quantities") return cmd_quantities(ctx);
  throw ValidationError("unknown command: " + command);
}

}  // namespace econlab
