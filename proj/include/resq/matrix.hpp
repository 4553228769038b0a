#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace resq {

/// Dense row-major real matrix. Every matrix in this library is square in
/// practice, but the type does not insist on it.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  explicit DenseMatrix(std::size_t n) : DenseMatrix(n, n) {}
  // Catches DenseMatrix(n, fill), which would otherwise convert fill to a column count.
  template <std::floating_point T>
  DenseMatrix(std::size_t, T) = delete;

  /// Builds from nested rows; all rows must have equal length.
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static DenseMatrix identity(std::size_t n);
  /// All-ones matrix J.
  static DenseMatrix ones(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t order() const noexcept { return rows_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  DenseMatrix transposed() const;
  double trace() const noexcept;
  /// Largest absolute entry.
  double max_abs() const noexcept;
  /// Frobenius norm.
  double frobenius() const noexcept;
  std::vector<double> row_sums() const;
  std::vector<double> multiply(std::span<const double> x) const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double s) noexcept;

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, double s) { return a *= s; }
  friend DenseMatrix operator*(double s, DenseMatrix a) { return a *= s; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// max |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// max |a_ij - a_ji| relative to max |a_ij| (0 for the zero matrix).
double asymmetry(const DenseMatrix& a) noexcept;

DenseMatrix diagonal(std::span<const double> d);

/// Symmetric permutation P A P^T with new index i taking old index perm[i].
DenseMatrix permuted(const DenseMatrix& a, std::span<const std::size_t> perm);

}  // namespace resq
