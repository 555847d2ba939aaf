#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "collin/errors.hpp"

namespace collin {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles. Carrier for X, X'X and correlation matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose j-th column is columns[j]. All columns must share a length.
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> values() const { return data_; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const double> values);
  Vector diagonal() const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix transpose() const;
  /// this' * this
  Matrix gram() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Vector operator*(const Matrix& a, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

// Relative pivot below which X'X is treated as exactly singular.
inline constexpr double kSingularPivot = 1e-12;

/// Rescales every column to unit Euclidean norm. Throws DataError on a zero column.
Matrix unit_length_scale(const Matrix& m);

/// Eigenvalues of a symmetric matrix in descending order (cyclic Jacobi).
Vector sym_eigenvalues(const Matrix& s);

/// Inverse of a symmetric positive definite matrix via Cholesky.
/// Throws SingularMatrixError when a pivot falls to kSingularPivot * max diagonal.
Matrix spd_inverse(const Matrix& s);

/// Determinant by LU with partial pivoting. Singular input yields 0 up to round-off.
double determinant(const Matrix& s);

/// Least-squares solution via Householder QR.
Vector least_squares(const Matrix& x, std::span<const double> y);

/// Least-squares via the normal equations (X'X)^-1 X'y. Kept for cross-checking the QR route.
Vector least_squares_normal(const Matrix& x, std::span<const double> y);

}  // namespace collin
