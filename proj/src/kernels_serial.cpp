#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "resq/error.hpp"
#include "resq/kernels.hpp"

namespace resq::kernels::serial {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matmul inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "inverse needs a square matrix");
  const std::size_t n = a.rows();
  DenseMatrix m = a;
  DenseMatrix inv = DenseMatrix::identity(n);
  const double scale = std::max(a.max_abs(), DBL_MIN);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(piv, col))) piv = i;
    if (std::abs(m(piv, col)) <= DBL_EPSILON * scale * static_cast<double>(n)) return std::nullopt;
    if (piv != col) {
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(col).begin());
      std::swap_ranges(inv.row(piv).begin(), inv.row(piv).end(), inv.row(col).begin());
    }
    const double d = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = m(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

DenseMatrix resistance_from_pinv(const DenseMatrix& pinv) {
  const std::size_t n = pinv.rows();
  DenseMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r(i, j) = std::max(0.0, pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j));
  return r;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "eigenvalues need a square matrix");
  const std::size_t n = a.rows();
  DenseMatrix m = a;
  const double total = std::max(m.frobenius(), DBL_MIN);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
    if (std::sqrt(off) <= 1e-15 * total) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = m(i, i);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace resq::kernels::serial
