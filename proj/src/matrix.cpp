#include "resq/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "resq/error.hpp"

namespace resq {

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw Error(ErrorKind::DimensionMismatch, "ragged row " + std::to_string(i));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::ones(std::size_t n) { return DenseMatrix(n, n, 1.0); }

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix::trace() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::frobenius() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

std::vector<double> DenseMatrix::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (double v : row(i)) sums[i] += v;
  return sums;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "vector length does not match column count");
  }
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum of different shapes");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference of different shapes");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) noexcept {
  for (double& v : data_) v *= s;
  return *this;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "comparing matrices of different shapes");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

double asymmetry(const DenseMatrix& a) noexcept {
  if (!a.square()) return INFINITY;
  const double scale = a.max_abs();
  if (scale == 0.0) return 0.0;
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
  return m / scale;
}

DenseMatrix diagonal(std::span<const double> d) {
  DenseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DenseMatrix permuted(const DenseMatrix& a, std::span<const std::size_t> perm) {
  if (perm.size() != a.rows() || !a.square()) {
    throw Error(ErrorKind::DimensionMismatch, "permutation length does not match matrix order");
  }
  DenseMatrix out(a.rows());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) out(i, j) = a(perm[i], perm[j]);
  return out;
}

}  // namespace resq
