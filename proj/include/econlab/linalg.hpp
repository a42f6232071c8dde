#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace econlab {

using Vector = std::vector<double>;

// Small dense row-major matrix. Everything in this library is n x n with
// n rarely above 6, so no attempt at blocking or sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  static Matrix identity(std::size_t n);

  // Submatrix keeping the given row/column indices, in the given order.
  Matrix select(const std::vector<std::size_t>& idx) const;

  bool all_nonnegative() const;
  bool all_zero() const;
  double max_column_sum() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// y = x . A  (row vector times matrix)
Vector left_multiply(const Vector& x, const Matrix& a);

// y = A . x  (matrix times column vector)
Vector right_multiply(const Matrix& a, const Vector& x);

Matrix multiply(const Matrix& a, const Matrix& b);

// Solves A x = b by Gaussian elimination with partial pivoting.
// Throws SingularMatrixError when no usable pivot is found.
Vector solve(Matrix a, Vector b);

// Solves x A = b, i.e. A^T x = b.
Vector solve_left(const Matrix& a, const Vector& b);

double sup_norm(const Vector& v);
double sup_distance(const Vector& a, const Vector& b);

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace econlab
