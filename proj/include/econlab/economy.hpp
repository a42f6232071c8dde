#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "econlab/errors.hpp"
#include "econlab/linalg.hpp"

namespace econlab {

// One production sector: N_i workers each needing F_i physical units of
// its commodity per period (when they consume it at all), jointly
// producing Q_i physical units per period.
struct Sector {
  std::string name;
  double population = 0.0;    // N_i, real-valued, >= 1
  double survival_dose = 0.0; // F_i, physical units per person per period
  double output = 0.0;        // Q_i, physical units per period

  // Output in dose units, X_i = Q_i / F_i.
  double doses() const { return output / survival_dose; }
};

enum class Units { physical, dose };

// 0/1 incidence: entry (i, j) is true when commodity i enters the
// production (i.e. the workers' consumption basket) of sector j.
using Incidence = std::vector<std::vector<bool>>;

class Economy {
 public:
  // Throws ValidationError on any invariant violation: fewer than two
  // sectors, duplicate names, non-positive data, a sector that cannot
  // feed its own workers, or an incidence column with no inputs.
  Economy(std::vector<Sector> sectors, std::optional<Incidence> incidence = {});

  const std::vector<Sector>& sectors() const { return sectors_; }
  std::size_t size() const { return sectors_.size(); }
  const Sector& sector(std::size_t i) const { return sectors_[i]; }

  // Index of the named sector; throws ValidationError if absent.
  std::size_t index_of(const std::string& name) const;

  double total_population() const { return total_population_; }
  double population_share(std::size_t i) const {
    return sectors_[i].population / total_population_;
  }

  bool full_incidence() const { return !incidence_.has_value(); }
  // Materialized incidence (all-ones when none was given).
  Incidence incidence() const;
  bool uses(std::size_t commodity, std::size_t sector) const;

  // Number of people whose basket contains commodity i.
  double consumers_of(std::size_t i) const;

 private:
  std::vector<Sector> sectors_;
  std::optional<Incidence> incidence_;
  double total_population_ = 0.0;
};

struct InputMatrix {
  Matrix entries; // A_ij, nonnegative
  Units units = Units::dose;
};

struct BasicsPartition {
  std::set<std::size_t> basic;
  std::set<std::size_t> non_basic;
  bool all_basic() const { return non_basic.empty(); }
};

// Technical coefficients A_ij = B_ij * F_i * N_j/Q_j (physical units)
// or B_ij * N_j/X_j (dose units).
InputMatrix build_input_matrix(const Economy& economy, Units units);

// Direct labour per unit output: a_j = N_j/Q_j, or N_j/X_j in dose units.
Vector labour_coefficients(const Economy& economy, Units units);

// A commodity is basic when it enters, directly or transitively, the
// production of every sector. Throws ValidationError on an all-zero
// column (a sector using no inputs cannot exist in this model).
BasicsPartition classify_basics(const InputMatrix& matrix);

// Reachability closure of the graph with an edge i -> j when A_ij > 0.
std::vector<std::vector<bool>> reachability(const Matrix& a);

}  // namespace econlab
