#pragma once

#include <cstdint>
#include <optional>

#include "econlab/economy.hpp"
#include "econlab/policy.hpp"

namespace econlab {

inline constexpr double kEigenTol = 1e-12;
inline constexpr std::uint64_t kEigenMaxIter = 1'000'000;

// Left Perron eigenpair of a technical matrix: p.A = lambda p with
// p > 0 on the basic block, lambda in (0, 1] for viable economies and
// maximum profit rate R = 1/lambda - 1.
struct EigenSolution {
  double lambda = 0.0;
  Vector prices; // numeraire-normalized
  double R = 0.0;
  std::uint64_t iterations = 0;
  double residual = 0.0; // sup norm of p.A(1+R) - p
  std::size_t numeraire = 0;
};

// One point on the wage-profit frontier: p.A(1+r) + a w = p.
struct DistributionSolution {
  double r = 0.0;
  double w = 0.0;
  Vector prices;
};

// Power iteration with a small dampening shift (iterates on A + delta I,
// which shares eigenvectors and is primitive whenever A is irreducible).
// The caller must restrict a reducible matrix to its basic block first.
EigenSolution perron_left_eigen(const Matrix& a, std::size_t numeraire = 0,
                                double tol = kEigenTol,
                                std::uint64_t max_iter = kEigenMaxIter);

// Closed form for full-incidence (rank-1) economies: prices proportional
// to the labour coefficients, lambda = sum_i a_i F_i.
EigenSolution natural_prices_pure_labour(const Economy& economy,
                                         std::size_t numeraire = 0,
                                         Units units = Units::dose);

// Reducible systems: eigensolve the basic block, then back-solve each
// non-basic price from its own column in condensation topological order.
// Throws NonBasicInfeasibleError when a back-solve denominator is <= 0.
EigenSolution solve_reducible(const Economy& economy, std::size_t numeraire = 0,
                              Units units = Units::dose, double tol = kEigenTol);

// Uniform-rate solve picking the closed form, the general eigensolver or
// the reducible path based on the matrix structure.
EigenSolution natural_prices(const Economy& economy, std::size_t numeraire = 0,
                             Units units = Units::dose, double tol = kEigenTol);

// Prices and wage at profit rate r in [0, R]; labour coefficients may be
// overridden (productivity scenarios).
DistributionSolution wage_profit_prices(const Economy& economy, double r,
                                        std::size_t numeraire = 0,
                                        Units units = Units::dose,
                                        const Vector* labour_override = nullptr);

// v = a . (I - A)^{-1}: direct plus indirect labour per unit of surplus.
Vector vertically_integrated_labour(const Matrix& a, const Vector& labour);

struct QuantitySolution {
  Vector gross_output;   // Q = (I - A)^{-1} Y
  double residual = 0.0; // sup norm of A.Q + Y - Q
};

// Gross outputs supporting surplus Y; throws ValidationError when some
// component of Q comes out negative (Y not producible).
QuantitySolution quantity_system(const Matrix& a, const Vector& surplus);

}  // namespace econlab
