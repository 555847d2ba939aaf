#include "collin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace collin {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DataError("Matrix: ragged initializer rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  Matrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw DataError("Matrix: columns differ in length");
    m.set_column(j, columns[j]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const double> values) {
  if (values.size() != rows_) throw DataError("Matrix: column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = values[i];
}

Vector Matrix::diagonal() const {
  Vector out(std::min(rows_, cols_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(i, i);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw DataError("Matrix: column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, indices[j]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::gram() const {
  Matrix out(cols_, cols_);
  for (std::size_t a = 0; a < cols_; ++a) {
    for (std::size_t b = a; b < cols_; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, a) * (*this)(i, b);
      out(a, b) = s;
      out(b, a) = s;
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DataError("Matrix: product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw DataError("Matrix: product shape mismatch");
  Vector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Matrix unit_length_scale(const Matrix& m) {
  Matrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double len = norm2(m.column(j));
    if (len == 0.0) throw DataError("unit_length_scale: column " + std::to_string(j) + " is zero");
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) /= len;
  }
  return out;
}

namespace {

void require_square(const Matrix& s, const char* who) {
  if (s.rows() != s.cols() || s.empty())
    throw DataError(std::string(who) + ": matrix is not square");
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius(const Matrix& a) { return norm2(a.values()); }

}  // namespace

Vector sym_eigenvalues(const Matrix& s) {
  require_square(s, "sym_eigenvalues");
  const std::size_t n = s.rows();
  double max_abs = 0.0;
  for (double v : s.values()) max_abs = std::max(max_abs, std::abs(v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s(i, j) - s(j, i)) > 1e-10 * max_abs)
        throw DataError("sym_eigenvalues: matrix is not symmetric");

  Matrix a = s;
  const double target = 1e-12 * frobenius(s);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        // A <- J' A J with the rotation in the (p, q) plane.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  Vector eig = a.diagonal();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

Matrix spd_inverse(const Matrix& s) {
  require_square(s, "spd_inverse");
  const std::size_t n = s.rows();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, s(i, i));
  const double floor = kSingularPivot * max_diag;

  // Lower Cholesky factor L with S = L L'.
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > floor)) throw SingularMatrixError("pivot " + std::to_string(j));
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / ljj;
    }
  }

  // Solve L L' X = I column by column.
  Matrix inv(n, n);
  Vector z(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double v = i == c ? 1.0 : 0.0;
      for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * z[k];
      z[i] = v / l(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double v = z[ii];
      for (std::size_t k = ii + 1; k < n; ++k) v -= l(k, ii) * inv(k, c);
      inv(ii, c) = v / l(ii, ii);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = avg;
      inv(j, i) = avg;
    }
  return inv;
}

double determinant(const Matrix& s) {
  require_square(s, "determinant");
  const std::size_t n = s.rows();
  Matrix a = s;
  double det = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t piv = j;
    for (std::size_t i = j + 1; i < n; ++i)
      if (std::abs(a(i, j)) > std::abs(a(piv, j))) piv = i;
    if (a(piv, j) == 0.0) return 0.0;
    if (piv != j) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(j, c), a(piv, c));
      det = -det;
    }
    det *= a(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      const double f = a(i, j) / a(j, j);
      for (std::size_t c = j; c < n; ++c) a(i, c) -= f * a(j, c);
    }
  }
  return det;
}

Vector least_squares(const Matrix& x, std::span<const double> y) {
  const std::size_t n = x.rows();
  const std::size_t k = x.cols();
  if (y.size() != n) throw DataError("least_squares: response length differs from rows");
  if (n <= k) throw DataError("least_squares: need more observations than columns");

  double max_sq = 0.0;
  for (std::size_t j = 0; j < k; ++j) max_sq = std::max(max_sq, dot(x.column(j), x.column(j)));
  const double floor = kSingularPivot * max_sq;

  Matrix a = x;
  Vector b(y.begin(), y.end());
  Vector v(n);
  for (std::size_t j = 0; j < k; ++j) {
    double sigma = 0.0;
    for (std::size_t i = j; i < n; ++i) sigma += a(i, j) * a(i, j);
    // |r_jj|^2 matches the Cholesky pivot of X'X, so the same floor applies.
    double tail = 0.0;
    for (std::size_t i = j + 1; i < n; ++i) tail += a(i, j) * a(i, j);
    const double alpha = (a(j, j) >= 0 ? -1.0 : 1.0) * std::sqrt(sigma);
    if (!(alpha * alpha > floor)) throw SingularMatrixError("column " + std::to_string(j));
    if (tail == 0.0 && a(j, j) == -alpha) continue;

    for (std::size_t i = 0; i < n; ++i) v[i] = i < j ? 0.0 : a(i, j);
    v[j] -= alpha;
    const double vnorm_sq = dot(v, v);
    if (vnorm_sq == 0.0) continue;
    for (std::size_t c = j; c < k; ++c) {
      double proj = 0.0;
      for (std::size_t i = j; i < n; ++i) proj += v[i] * a(i, c);
      const double f = 2.0 * proj / vnorm_sq;
      for (std::size_t i = j; i < n; ++i) a(i, c) -= f * v[i];
    }
    double proj = 0.0;
    for (std::size_t i = j; i < n; ++i) proj += v[i] * b[i];
    const double f = 2.0 * proj / vnorm_sq;
    for (std::size_t i = j; i < n; ++i) b[i] -= f * v[i];
  }

  Vector beta(k);
  for (std::size_t jj = k; jj-- > 0;) {
    double s = b[jj];
    for (std::size_t c = jj + 1; c < k; ++c) s -= a(jj, c) * beta[c];
    beta[jj] = s / a(jj, jj);
  }
  return beta;
}

Vector least_squares_normal(const Matrix& x, std::span<const double> y) {
  if (y.size() != x.rows()) throw DataError("least_squares_normal: response length differs from rows");
  if (x.rows() <= x.cols()) throw DataError("least_squares_normal: need more observations than columns");
  const Matrix inv = spd_inverse(x.gram());
  const Vector xty = x.transpose() * y;
  return inv * xty;
}

}  // namespace collin
