#include "econlab/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace econlab {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) schema_fail(where + "." + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(where + "." + key, "missing required field");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) schema_fail(where, "must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) schema_fail(where, "must be finite");
  return x;
}

std::string string_field(const json& v, const std::string& where) {
  if (!v.is_string()) schema_fail(where, "must be a string");
  return v.get<std::string>();
}

Vector number_array(const json& v, const std::string& where) {
  if (!v.is_array()) schema_fail(where, "must be an array of numbers");
  Vector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Economy parse_economy(const json& v, const std::string& where) {
  if (!v.is_object()) schema_fail(where, "must be an object");
  reject_unknown_keys(v, where, {"sectors", "incidence"});

  const json& jsectors = require(v, where, "sectors");
  if (!jsectors.is_array()) schema_fail(where + ".sectors", "must be an array");
  std::vector<Sector> sectors;
  for (std::size_t i = 0; i < jsectors.size(); ++i) {
    const std::string sw = where + ".sectors[" + std::to_string(i) + "]";
    const json& js = jsectors[i];
    if (!js.is_object()) schema_fail(sw, "must be an object");
    reject_unknown_keys(js, sw, {"name", "population", "survival_dose", "output"});
    Sector s;
    s.name = string_field(require(js, sw, "name"), sw + ".name");
    s.population = number(require(js, sw, "population"), sw + ".population");
    s.survival_dose = number(require(js, sw, "survival_dose"), sw + ".survival_dose");
    s.output = number(require(js, sw, "output"), sw + ".output");
    sectors.push_back(std::move(s));
  }

  std::optional<Incidence> incidence;
  if (auto it = v.find("incidence"); it != v.end()) {
    const std::string iw = where + ".incidence";
    if (!it->is_array()) schema_fail(iw, "must be an array of 0/1 rows");
    Incidence b;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& row = (*it)[i];
      const std::string rw = iw + "[" + std::to_string(i) + "]";
      if (!row.is_array()) schema_fail(rw, "must be an array of 0/1");
      std::vector<bool> brow;
      for (std::size_t j = 0; j < row.size(); ++j) {
        const json& cell = row[j];
        if (!cell.is_number_integer() ||
            (cell.get<int>() != 0 && cell.get<int>() != 1))
          schema_fail(rw + "[" + std::to_string(j) + "]", "must be 0 or 1");
        brow.push_back(cell.get<int>() == 1);
      }
      b.push_back(std::move(brow));
    }
    incidence = std::move(b);
  }

  return Economy(std::move(sectors), std::move(incidence));
}

Units parse_units(const json& v, const std::string& where) {
  const std::string s = string_field(v, where);
  if (s == "dose") return Units::dose;
  if (s == "physical") return Units::physical;
  schema_fail(where, "must be \"dose\" or \"physical\"");
}

PriceSpec parse_prices(const json& v, const std::string& where) {
  if (!v.is_object()) schema_fail(where, "must be an object");
  reject_unknown_keys(v, where, {"values", "units", "numeraire"});
  PriceSpec spec;
  spec.values = number_array(require(v, where, "values"), where + ".values");
  if (auto it = v.find("units"); it != v.end())
    spec.units = parse_units(*it, where + ".units");
  if (auto it = v.find("numeraire"); it != v.end() && !it->is_null())
    spec.numeraire = string_field(*it, where + ".numeraire");
  return spec;
}

std::vector<std::string> string_array(const json& v, const std::string& where) {
  if (!v.is_array()) schema_fail(where, "must be an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(string_field(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Scenario parse_one_scenario(const json& v, const std::string& where) {
  if (!v.is_object()) schema_fail(where, "must be an object");
  const std::string kind = string_field(require(v, where, "kind"), where + ".kind");
  Scenario sc;
  if (kind == "output_scaling") {
    sc.kind = ScenarioKind::output_scaling;
    reject_unknown_keys(v, where, {"kind", "target", "gamma"});
    sc.target = string_field(require(v, where, "target"), where + ".target");
    sc.gamma = number(require(v, where, "gamma"), where + ".gamma");
  } else if (kind == "labour_saving") {
    sc.kind = ScenarioKind::labour_saving;
    reject_unknown_keys(v, where, {"kind", "target", "g"});
    sc.target = string_field(require(v, where, "target"), where + ".target");
    sc.g = number(require(v, where, "g"), where + ".g");
  } else if (kind == "add_luxury" || kind == "add_input_sector") {
    sc.kind = kind == "add_luxury" ? ScenarioKind::add_luxury
                                   : ScenarioKind::add_input_sector;
    reject_unknown_keys(v, where,
                        {"kind", "name", "population", "survival_dose", "output",
                         "inputs", "consumers", "consumes_own"});
    auto& ns = sc.new_sector;
    ns.name = string_field(require(v, where, "name"), where + ".name");
    if (auto it = v.find("population"); it != v.end())
      ns.population = number(*it, where + ".population");
    if (auto it = v.find("survival_dose"); it != v.end())
      ns.survival_dose = number(*it, where + ".survival_dose");
    ns.output = number(require(v, where, "output"), where + ".output");
    if (auto it = v.find("inputs"); it != v.end())
      ns.inputs = string_array(*it, where + ".inputs");
    if (auto it = v.find("consumers"); it != v.end()) {
      if (sc.kind == ScenarioKind::add_luxury)
        schema_fail(where + ".consumers", "a luxury has no consumers");
      ns.consumers = string_array(*it, where + ".consumers");
    }
    if (auto it = v.find("consumes_own"); it != v.end()) {
      if (!it->is_boolean()) schema_fail(where + ".consumes_own", "must be a boolean");
      ns.consumes_own = it->get<bool>();
    }
  } else {
    schema_fail(where + ".kind", "unknown scenario kind \"" + kind + "\"");
  }
  return sc;
}

SimSpec parse_sim(const json& v, const std::string& where) {
  if (!v.is_object()) schema_fail(where, "must be an object");
  reject_unknown_keys(v, where, {"mode", "periods", "savings"});
  SimSpec spec;
  const std::string mode =
      string_field(require(v, where, "mode"), where + ".mode");
  if (mode == "closed")
    spec.mode = SimMode::closed;
  else if (mode == "open")
    spec.mode = SimMode::open;
  else
    schema_fail(where + ".mode", "must be \"closed\" or \"open\"");
  const json& jp = require(v, where, "periods");
  if (!jp.is_number_unsigned() || jp.get<std::uint64_t>() < 1)
    schema_fail(where + ".periods", "must be a positive integer");
  spec.periods = jp.get<std::uint64_t>();
  spec.savings = number_array(require(v, where, "savings"), where + ".savings");
  return spec;
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$: top level must be an object");
  reject_unknown_keys(doc, "$", {"economy", "prices", "scenarios", "sim", "surplus"});

  ScenarioFile file{parse_economy(require(doc, "$", "economy"), "$.economy")};

  if (auto it = doc.find("prices"); it != doc.end()) {
    file.prices = parse_prices(*it, "$.prices");
    if (file.prices->values.size() != file.economy.size())
      schema_fail("$.prices.values", "length must equal sector count");
    if (file.prices->numeraire) file.economy.index_of(*file.prices->numeraire);
  }
  if (auto it = doc.find("scenarios"); it != doc.end()) {
    if (!it->is_array()) schema_fail("$.scenarios", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      file.scenarios.push_back(
          parse_one_scenario((*it)[i], "$.scenarios[" + std::to_string(i) + "]"));
  }
  if (auto it = doc.find("sim"); it != doc.end()) {
    file.sim = parse_sim(*it, "$.sim");
    if (file.sim->savings.size() != file.economy.size())
      schema_fail("$.sim.savings", "length must equal sector count");
  }
  if (auto it = doc.find("surplus"); it != doc.end()) {
    file.surplus = number_array(*it, "$.surplus");
    if (file.surplus->size() != file.economy.size())
      schema_fail("$.surplus", "length must equal sector count");
  }
  return file;
}

ScenarioFile parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

nlohmann::json scenario_to_json(const ScenarioFile& file) {
  json doc;
  json jsectors = json::array();
  for (const auto& s : file.economy.sectors())
    jsectors.push_back({{"name", s.name},
                        {"population", s.population},
                        {"survival_dose", s.survival_dose},
                        {"output", s.output}});
  doc["economy"]["sectors"] = std::move(jsectors);
  if (!file.economy.full_incidence()) {
    json rows = json::array();
    for (const auto& row : file.economy.incidence()) {
      json r = json::array();
      for (bool b : row) r.push_back(b ? 1 : 0);
      rows.push_back(std::move(r));
    }
    doc["economy"]["incidence"] = std::move(rows);
  }
  if (file.prices) {
    doc["prices"]["values"] = file.prices->values;
    doc["prices"]["units"] = file.prices->units == Units::dose ? "dose" : "physical";
    if (file.prices->numeraire) doc["prices"]["numeraire"] = *file.prices->numeraire;
  }
  if (!file.scenarios.empty()) {
    json list = json::array();
    for (const auto& sc : file.scenarios) {
      json j;
      switch (sc.kind) {
        case ScenarioKind::output_scaling:
          j = {{"kind", "output_scaling"}, {"target", sc.target}, {"gamma", sc.gamma}};
          break;
        case ScenarioKind::labour_saving:
          j = {{"kind", "labour_saving"}, {"target", sc.target}, {"g", sc.g}};
          break;
        case ScenarioKind::add_luxury:
        case ScenarioKind::add_input_sector: {
          j["kind"] = sc.kind == ScenarioKind::add_luxury ? "add_luxury"
                                                          : "add_input_sector";
          j["name"] = sc.new_sector.name;
          j["population"] = sc.new_sector.population;
          j["survival_dose"] = sc.new_sector.survival_dose;
          j["output"] = sc.new_sector.output;
          if (!sc.new_sector.inputs.empty()) j["inputs"] = sc.new_sector.inputs;
          if (!sc.new_sector.consumers.empty() &&
              sc.kind == ScenarioKind::add_input_sector)
            j["consumers"] = sc.new_sector.consumers;
          j["consumes_own"] = sc.new_sector.consumes_own;
          break;
        }
      }
      list.push_back(std::move(j));
    }
    doc["scenarios"] = std::move(list);
  }
  if (file.sim) {
    doc["sim"]["mode"] = file.sim->mode == SimMode::closed ? "closed" : "open";
    doc["sim"]["periods"] = file.sim->periods;
    doc["sim"]["savings"] = file.sim->savings;
  }
  if (file.surplus) doc["surplus"] = *file.surplus;
  return doc;
}

PriceVector resolve_prices(const Economy& economy, const PriceSpec& spec) {
  Vector physical(spec.values.size());
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    physical[i] = spec.units == Units::dose
                      ? spec.values[i] / economy.sector(i).survival_dose
                      : spec.values[i];
    if (!(physical[i] > 0.0))
      throw ValidationError("price of " + economy.sector(i).name +
                            " must be positive");
  }
  PriceVector pv{std::move(physical), std::nullopt};
  if (spec.numeraire) {
    const std::size_t num = economy.index_of(*spec.numeraire);
    const double unit = spec.units == Units::dose
                            ? economy.sector(num).survival_dose
                            : 1.0;
    pv = PriceVector::normalized(std::move(pv.prices), num, unit);
  }
  return pv;
}

}  // namespace econlab
