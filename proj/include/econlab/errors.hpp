#pragma once

#include <stdexcept>
#include <string>

namespace econlab {

// Economy or operation precondition violated (bad construction data,
// wrong sector count, non-viable input to an operation that needs one).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A non-basic sector whose own-use-adjusted output cannot cover the
// exogenous profit requirement; no finite positive price exists.
class NonBasicInfeasibleError : public std::runtime_error {
 public:
  NonBasicInfeasibleError(std::string sector, std::string what)
      : std::runtime_error(std::move(what)), sector_(std::move(sector)) {}
  const std::string& sector() const { return sector_; }

 private:
  std::string sector_;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario file is not valid JSON at all.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Valid JSON that does not match the scenario schema (wrong type,
// unknown key, missing field).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace econlab
