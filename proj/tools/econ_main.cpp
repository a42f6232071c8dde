#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "econlab/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"linear production economy toolkit"};
  app.require_subcommand(1);

  std::string file_path;
  econlab::RunOptions opts;
  if (const char* env = std::getenv("ECON_TOL")) opts.tol = std::atof(env);

  const std::vector<std::string> commands = {
      "viability", "band",     "feasible", "rates",     "natural",
      "distribution", "scenario", "simulate", "quantities"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("file", file_path, "scenario JSON file")->required();
    sub->add_flag("--json", opts.json, "emit JSON instead of a table");
    sub->add_flag("--physical", opts.physical, "report raw physical units, not doses");
    sub->add_option("--numeraire", opts.numeraire, "sector whose price is set to 1");
    sub->add_option("--tol", opts.tol, "solver tolerance (overrides ECON_TOL)");
    if (name == "distribution")
      sub->add_option("--r-grid", opts.r_grid, "profit-rate sweep a:b:n");
    if (name == "simulate")
      sub->add_flag("--csv", opts.csv, "emit the trajectory as CSV");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();

  std::optional<econlab::ScenarioFile> file;
  try {
    file = econlab::parse_scenario_file(file_path);
  } catch (const econlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const econlab::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const econlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }

  try {
    const econlab::RunResult result = econlab::run_command(command, *file, opts);
    std::cout << result.output;
    return result.exit_code;
  } catch (const econlab::NonBasicInfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
