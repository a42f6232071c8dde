#pragma once

// Independent oracles used only by tests. These deliberately take the
// dumbest correct route (boolean matrix powers, characteristic
// polynomials, truncated Neumann series) so they share no code path with
// the implementations they check.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "econlab/linalg.hpp"

namespace econlab::testing {

// Reachability via boolean matrix powers G + G^2 + ... + G^n.
inline std::vector<std::vector<bool>> reachability_oracle(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> g(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a(i, j) > 0.0;
  auto acc = g;
  auto power = g;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (power[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (g[k][j]) next[i][j] = true;
    power = next;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power[i][j]) acc[i][j] = true;
  }
  return acc;
}

// Dominant root of the characteristic polynomial for 2x2 / 3x3
// nonnegative matrices, by Newton from the right of all roots (the
// critical points of the polynomial lie in the convex hull of its roots,
// so the iteration decreases monotonically onto the largest real root).
inline double char_poly_dominant_root(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> c; // p(x) = x^n + c[0] x^{n-1} + ...
  if (n == 2) {
    const double tr = a(0, 0) + a(1, 1);
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    c = {-tr, det};
  } else if (n == 3) {
    const double tr = a(0, 0) + a(1, 1) + a(2, 2);
    const double m01 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double m02 = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
    const double m12 = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    const double det =
        a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
        a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
        a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    c = {-tr, m01 + m02 + m12, -det};
  } else {
    throw std::invalid_argument("oracle supports 2x2 and 3x3 only");
  }

  auto eval = [&](double x, double* dp) {
    double p = 1.0, d = 0.0;
    for (double ck : c) {
      d = d * x + p;
      p = p * x + ck;
    }
    if (dp) *dp = d;
    return p;
  };

  double x = a.max_column_sum() + 1.0;
  for (int it = 0; it < 200; ++it) {
    double d = 0.0;
    const double p = eval(x, &d);
    if (d == 0.0) break;
    const double next = x - p / d;
    if (std::abs(next - x) < 1e-15 * (1.0 + std::abs(x))) return next;
    x = next;
  }
  return x;
}

// Truncated Neumann series a . (I + A + A^2 + ...).
inline Vector neumann_series_labour(const Matrix& a, const Vector& labour,
                                    double cutoff = 1e-12) {
  Vector total = labour;
  Vector term = labour;
  for (int k = 0; k < 100000; ++k) {
    term = left_multiply(term, a);
    double mag = sup_norm(term);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += term[i];
    if (mag < cutoff) break;
  }
  return total;
}

}  // namespace econlab::testing
