#include "econlab/natural.hpp"

#include <algorithm>
#include <cmath>

namespace econlab {

namespace {

// Shift used to make power iteration safe on periodic matrices; A + dI
// has the same eigenvectors, with every eigenvalue moved by d.
constexpr double kDampening = 1e-3;

double eigen_residual(const Matrix& a, const Vector& p, double lambda) {
  Vector pa = left_multiply(p, a);
  double worst = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j)
    worst = std::max(worst, std::abs(pa[j] / lambda - p[j]));
  return worst;
}

}  // namespace

EigenSolution perron_left_eigen(const Matrix& a, std::size_t numeraire,
                                double tol, std::uint64_t max_iter) {
  if (!a.square()) throw ValidationError("eigensolve needs a square matrix");
  if (!a.all_nonnegative()) throw ValidationError("eigensolve needs a nonnegative matrix");
  if (a.all_zero()) throw ValidationError("eigensolve rejects the zero matrix");
  if (numeraire >= a.rows()) throw ValidationError("numeraire index out of range");

  const std::size_t n = a.rows();
  Vector p(n, 1.0);
  double growth = 0.0;
  EigenSolution sol;

  for (std::uint64_t it = 1; it <= max_iter; ++it) {
    Vector next = left_multiply(p, a);
    for (std::size_t i = 0; i < n; ++i) next[i] += kDampening * p[i];
    growth = next[numeraire] / p[numeraire];
    for (double& v : next) v /= growth;
    const double change = sup_distance(next, p);
    p = std::move(next);
    sol.iterations = it;
    if (change <= tol) {
      sol.lambda = growth - kDampening;
      sol.prices = std::move(p);
      sol.R = 1.0 / sol.lambda - 1.0;
      sol.numeraire = numeraire;
      sol.residual = eigen_residual(a, sol.prices, sol.lambda);
      return sol;
    }
  }
  throw ConvergenceError("power iteration did not converge");
}

EigenSolution natural_prices_pure_labour(const Economy& economy,
                                         std::size_t numeraire, Units units) {
  if (!economy.full_incidence())
    throw ValidationError("closed form requires full incidence; use the general solver");

  const Vector a = labour_coefficients(economy, units);
  double lambda = 0.0;
  for (std::size_t i = 0; i < economy.size(); ++i) {
    const double dose = units == Units::physical ? economy.sector(i).survival_dose : 1.0;
    lambda += a[i] * dose;
  }

  EigenSolution sol;
  sol.lambda = lambda;
  sol.R = 1.0 / lambda - 1.0;
  sol.numeraire = numeraire;
  sol.prices = a;
  const double ref = sol.prices[numeraire];
  for (double& p : sol.prices) p /= ref;
  sol.residual =
      eigen_residual(build_input_matrix(economy, units).entries, sol.prices, lambda);
  return sol;
}

EigenSolution solve_reducible(const Economy& economy, std::size_t numeraire,
                              Units units, double tol) {
  const InputMatrix im = build_input_matrix(economy, units);
  const Matrix& a = im.entries;
  const std::size_t n = a.rows();
  const BasicsPartition part = classify_basics(im);
  if (part.basic.empty())
    throw ValidationError("no basic commodities: uniform-rate system undefined");

  if (part.all_basic()) return perron_left_eigen(a, numeraire, tol);

  const std::vector<std::size_t> basic(part.basic.begin(), part.basic.end());
  const Matrix basic_block = a.select(basic);
  EigenSolution block = perron_left_eigen(basic_block, 0, tol);

  Vector prices(n, 0.0);
  std::vector<bool> solved(n, false);
  for (std::size_t k = 0; k < basic.size(); ++k) {
    prices[basic[k]] = block.prices[k];
    solved[basic[k]] = true;
  }

  // Group the non-basics into strongly connected components and solve
  // each one once all of its suppliers are priced.
  const auto reach = reachability(a);
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> grouped(n, false);
  for (std::size_t i : part.non_basic) {
    if (grouped[i]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t j : part.non_basic)
      if (i == j || (reach[i][j] && reach[j][i])) {
        comp.push_back(j);
        grouped[j] = true;
      }
    components.push_back(std::move(comp));
  }

  const double growth = 1.0 + block.R;
  std::vector<bool> done(components.size(), false);
  for (std::size_t round = 0; round < components.size(); ++round) {
    bool progressed = false;
    for (std::size_t c = 0; c < components.size(); ++c) {
      if (done[c]) continue;
      const auto& comp = components[c];
      bool ready = true;
      for (std::size_t k : comp)
        for (std::size_t i = 0; i < n; ++i)
          if (a(i, k) > 0.0 && !solved[i] &&
              std::find(comp.begin(), comp.end(), i) == comp.end())
            ready = false;
      if (!ready) continue;

      if (comp.size() == 1) {
        const std::size_t k = comp[0];
        const double denom = 1.0 - growth * a(k, k);
        double supplied = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          if (i != k) supplied += prices[i] * a(i, k);
        if (denom <= 1e-12)
          throw NonBasicInfeasibleError(
              economy.sector(k).name,
              "non-basic infeasible: sector " + economy.sector(k).name +
                  " cannot cover the uniform profit requirement at any price");
        prices[k] = growth * supplied / denom;
      } else {
        // p_S (I - (1+R) A_SS) = (1+R) b, b from already-priced suppliers.
        const std::size_t m = comp.size();
        Matrix sys(m, m);
        Vector rhs(m, 0.0);
        for (std::size_t kk = 0; kk < m; ++kk) {
          const std::size_t k = comp[kk];
          for (std::size_t ii = 0; ii < m; ++ii)
            sys(ii, kk) = (ii == kk ? 1.0 : 0.0) - growth * a(comp[ii], k);
          for (std::size_t i = 0; i < n; ++i)
            if (solved[i]) rhs[kk] += growth * prices[i] * a(i, k);
        }
        Vector sol_block;
        try {
          sol_block = solve_left(sys, rhs);
        } catch (const SingularMatrixError&) {
          throw NonBasicInfeasibleError(economy.sector(comp[0]).name,
                                        "non-basic infeasible: singular block");
        }
        for (std::size_t kk = 0; kk < m; ++kk) {
          if (!(sol_block[kk] > 0.0))
            throw NonBasicInfeasibleError(
                economy.sector(comp[kk]).name,
                "non-basic infeasible: sector " + economy.sector(comp[kk]).name +
                    " has no positive price");
          prices[comp[kk]] = sol_block[kk];
        }
      }
      for (std::size_t k : comp) solved[k] = true;
      done[c] = true;
      progressed = true;
    }
    if (!progressed) break;
  }

  EigenSolution sol;
  sol.lambda = block.lambda;
  sol.R = block.R;
  sol.iterations = block.iterations;
  sol.numeraire = numeraire;
  const double ref = prices[numeraire];
  if (!(ref > 0.0)) throw ValidationError("numeraire price is not positive");
  for (double& p : prices) p /= ref;
  sol.prices = std::move(prices);
  sol.residual = eigen_residual(a, sol.prices, sol.lambda);
  return sol;
}

EigenSolution natural_prices(const Economy& economy, std::size_t numeraire,
                             Units units, double tol) {
  if (economy.full_incidence())
    return natural_prices_pure_labour(economy, numeraire, units);
  return solve_reducible(economy, numeraire, units, tol);
}

DistributionSolution wage_profit_prices(const Economy& economy, double r,
                                        std::size_t numeraire, Units units,
                                        const Vector* labour_override) {
  const EigenSolution eig = natural_prices(economy, numeraire, units);
  const double tol = 1e-9 * (1.0 + eig.R);
  if (r < -tol) throw ValidationError("profit rate must be nonnegative");
  if (r > eig.R + tol)
    throw ValidationError("profit rate exceeds the maximum R");

  const Vector a = labour_override ? *labour_override
                                   : labour_coefficients(economy, units);
  if (a.size() != economy.size())
    throw ValidationError("labour vector length must equal sector count");

  if (std::abs(r - eig.R) <= tol)
    return DistributionSolution{eig.R, 0.0, eig.prices};

  const Matrix tech = build_input_matrix(economy, units).entries;
  const std::size_t n = economy.size();
  Matrix sys(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sys(i, j) = (i == j ? 1.0 : 0.0) - (1.0 + r) * tech(i, j);

  // p = w a (I - (1+r)A)^{-1}; the numeraire normalization fixes w.
  const Vector t = solve_left(sys, a);
  const double ref = t[numeraire];
  if (!(ref > 0.0)) throw ValidationError("no positive solution at this profit rate");
  DistributionSolution sol;
  sol.r = r;
  sol.w = 1.0 / ref;
  sol.prices = t;
  for (double& p : sol.prices) p /= ref;
  return sol;
}

Vector vertically_integrated_labour(const Matrix& a, const Vector& labour) {
  if (!a.square() || a.rows() != labour.size())
    throw ValidationError("dimension mismatch in vertically integrated labour");
  const std::size_t n = a.rows();
  Matrix sys(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sys(i, j) = (i == j ? 1.0 : 0.0) - a(i, j);
  return solve_left(sys, labour);
}

QuantitySolution quantity_system(const Matrix& a, const Vector& surplus) {
  if (!a.square() || a.rows() != surplus.size())
    throw ValidationError("dimension mismatch in quantity system");
  for (double y : surplus)
    if (y < 0.0) throw ValidationError("surplus must be nonnegative");
  const std::size_t n = a.rows();
  Matrix sys(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sys(i, j) = (i == j ? 1.0 : 0.0) - a(i, j);
  QuantitySolution sol;
  sol.gross_output = solve(std::move(sys), surplus);
  for (double q : sol.gross_output)
    if (q < -1e-12) throw ValidationError("infeasible surplus: negative gross output");
  const Vector aq = right_multiply(a, sol.gross_output);
  for (std::size_t i = 0; i < n; ++i)
    sol.residual = std::max(sol.residual,
                            std::abs(aq[i] + surplus[i] - sol.gross_output[i]));
  return sol;
}

}  // namespace econlab
