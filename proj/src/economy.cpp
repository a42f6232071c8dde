#include "econlab/economy.hpp"

#include <unordered_set>

namespace econlab {

Economy::Economy(std::vector<Sector> sectors, std::optional<Incidence> incidence)
    : sectors_(std::move(sectors)), incidence_(std::move(incidence)) {
  if (sectors_.size() < 2) throw ValidationError("economy needs at least 2 sectors");

  std::unordered_set<std::string> names;
  for (const auto& s : sectors_) {
    if (s.name.empty()) throw ValidationError("sector name must be non-empty");
    if (!names.insert(s.name).second)
      throw ValidationError("duplicate sector name: " + s.name);
    if (!(s.population >= 1.0))
      throw ValidationError("sector " + s.name + ": population must be >= 1");
    if (!(s.survival_dose > 0.0))
      throw ValidationError("sector " + s.name + ": survival_dose must be > 0");
    if (!(s.output > 0.0))
      throw ValidationError("sector " + s.name + ": output must be > 0");
    total_population_ += s.population;
  }

  const std::size_t n = sectors_.size();
  if (incidence_) {
    if (incidence_->size() != n)
      throw ValidationError("incidence matrix side must equal sector count");
    for (const auto& row : *incidence_)
      if (row.size() != n)
        throw ValidationError("incidence matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) any = any || (*incidence_)[i][j];
      if (!any)
        throw ValidationError("sector " + sectors_[j].name + " uses no inputs");
    }
  }

  // A sector that consumes its own commodity must at least feed its own
  // workers; otherwise no price system gives it positive net revenue.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = sectors_[i];
    if (uses(i, i) && s.output < s.population * s.survival_dose)
      throw ValidationError("sector " + s.name + " cannot feed its own workers");
  }
}

std::size_t Economy::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < sectors_.size(); ++i)
    if (sectors_[i].name == name) return i;
  throw ValidationError("unknown sector: " + name);
}

Incidence Economy::incidence() const {
  if (incidence_) return *incidence_;
  return Incidence(size(), std::vector<bool>(size(), true));
}

bool Economy::uses(std::size_t commodity, std::size_t sector) const {
  if (!incidence_) return true;
  return (*incidence_)[commodity][sector];
}

double Economy::consumers_of(std::size_t i) const {
  if (!incidence_) return total_population_;
  double n = 0.0;
  for (std::size_t j = 0; j < size(); ++j)
    if ((*incidence_)[i][j]) n += sectors_[j].population;
  return n;
}

InputMatrix build_input_matrix(const Economy& economy, Units units) {
  const std::size_t n = economy.size();
  Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& s = economy.sector(j);
    for (std::size_t i = 0; i < n; ++i) {
      if (!economy.uses(i, j)) continue;
      a(i, j) = units == Units::physical
                    ? economy.sector(i).survival_dose * s.population / s.output
                    : s.population / s.doses();
    }
  }
  return InputMatrix{std::move(a), units};
}

Vector labour_coefficients(const Economy& economy, Units units) {
  Vector a(economy.size());
  for (std::size_t j = 0; j < economy.size(); ++j) {
    const auto& s = economy.sector(j);
    a[j] = s.population / (units == Units::physical ? s.output : s.doses());
  }
  return a;
}

std::vector<std::vector<bool>> reachability(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = a(i, j) > 0.0;
  // Warshall closure; paths of length >= 1.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

BasicsPartition classify_basics(const InputMatrix& matrix) {
  const Matrix& a = matrix.entries;
  if (!a.square()) throw ValidationError("input matrix must be square");
  if (!a.all_nonnegative()) throw ValidationError("input matrix must be nonnegative");
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any = any || a(i, j) > 0.0;
    if (!any) throw ValidationError("input matrix has an all-zero column");
  }

  const auto reach = reachability(a);
  BasicsPartition part;
  for (std::size_t i = 0; i < n; ++i) {
    bool everywhere = true;
    for (std::size_t j = 0; j < n; ++j) everywhere = everywhere && reach[i][j];
    if (everywhere)
      part.basic.insert(i);
    else
      part.non_basic.insert(i);
  }
  return part;
}

}  // namespace econlab
