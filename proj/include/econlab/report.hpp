#pragma once

#include <optional>
#include <string>

#include "econlab/scenario_file.hpp"

namespace econlab {

struct RunOptions {
  bool json = false;
  bool csv = false;      // trajectory export (simulate only)
  bool physical = false; // report in raw physical units instead of doses
  std::optional<std::string> numeraire;
  std::optional<std::string> r_grid; // "a:b:n" sweep for `distribution`
  double tol = 1e-12;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

// Exit codes: 0 on feasible/steady verdicts, 2 on infeasible, collapse or
// non-basic-infeasible verdicts, 1 on usage errors. Parse-stage errors
// (3: malformed JSON, 4: schema, 5: economy invariant) are the caller's
// concern.
RunResult run_command(const std::string& command, const ScenarioFile& file,
                      const RunOptions& opts);

}  // namespace econlab
