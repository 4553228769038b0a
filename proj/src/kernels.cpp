#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "resq/error.hpp"
#include "resq/kernels.hpp"

namespace resq::kernels {
namespace {

void require_square(const DenseMatrix& a, const char* what) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a square matrix");
}

// Implicit-shift QL on a symmetric tridiagonal matrix. `d` is the diagonal,
// `e[i]` couples rows i and i+1 (e.back() is ignored). Eigenvalues are left
// in `d`.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(d.size());
  if (n == 0) return;
  e.back() = 0.0;
  for (std::ptrdiff_t l = 0; l < n; ++l) {
    int iter = 0;
    std::ptrdiff_t m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= DBL_EPSILON * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("tridiagonal QL did not converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      std::ptrdiff_t i = m - 1;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Underflow: split the matrix and restart from l.
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }
}

}  // namespace

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matmul inner dimensions differ");
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  DenseMatrix c(a.rows(), cols);
#pragma omp parallel for schedule(static) if (a.rows() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    auto out = c.row(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a(static_cast<std::size_t>(i), k);
      if (aik == 0.0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < cols; ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

std::optional<DenseMatrix> spd_inverse(const DenseMatrix& a) {
  require_square(a, "spd_inverse");
  const std::size_t n = a.rows();
  const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
  const bool parallel = n >= kParallelThreshold;

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
  const double pivot_floor = DBL_EPSILON * scale * static_cast<double>(std::max<std::size_t>(n, 1));

  // Unit lower triangle in the strict lower part of `f`, D on its diagonal.
  DenseMatrix f = a;
  std::vector<double> work(n);
  for (std::size_t j = 0; j < n; ++j) {
    double dj = f(j, j);
    for (std::size_t k = 0; k < j; ++k) {
      work[k] = f(j, k) * f(k, k);
      dj -= f(j, k) * work[k];
    }
    if (!(dj > pivot_floor)) return std::nullopt;
    f(j, j) = dj;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t si = static_cast<std::ptrdiff_t>(j) + 1; si < sn; ++si) {
      const auto i = static_cast<std::size_t>(si);
      double v = f(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= f(i, k) * work[k];
      f(i, j) = v / dj;
    }
  }

  // Column c of the inverse solves L D L^T x = e_c. Columns are independent.
  DenseMatrix inv(n);
#pragma omp parallel if (parallel)
  {
    std::vector<double> x(n);
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t sc = 0; sc < sn; ++sc) {
      const auto c = static_cast<std::size_t>(sc);
      std::fill(x.begin(), x.end(), 0.0);
      x[c] = 1.0;
      for (std::size_t i = c + 1; i < n; ++i) {
        double v = 0.0;
        for (std::size_t k = c; k < i; ++k) v += f(i, k) * x[k];
        x[i] = -v;
      }
      for (std::size_t i = c; i < n; ++i) x[i] /= f(i, i);
      for (std::size_t ii = n; ii-- > 0;) {
        double v = x[ii];
        for (std::size_t k = ii + 1; k < n; ++k) v -= f(k, ii) * x[k];
        x[ii] = v;
      }
      for (std::size_t i = 0; i < n; ++i) inv(i, c) = x[i];
    }
  }
  // Symmetrize: the two triangles come from different solves.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = v;
      inv(j, i) = v;
    }
  return inv;
}

DenseMatrix resistance_from_pinv(const DenseMatrix& pinv) {
  require_square(pinv, "resistance_from_pinv");
  const std::size_t n = pinv.rows();
  const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
  DenseMatrix r(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // Clamp tiny negative rounding residue; true resistances are > 0.
      r(i, j) = std::max(0.0, pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j));
    }
  }
  return r;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& a) {
  require_square(a, "symmetric_eigenvalues");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  DenseMatrix w = a;
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);
  std::vector<double> v(n, 0.0);
  std::vector<double> p(n, 0.0);
  const bool parallel = n >= kParallelThreshold;

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t lo = k + 1;
    const std::ptrdiff_t slo = static_cast<std::ptrdiff_t>(lo);
    const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
    double norm2 = 0.0;
    for (std::size_t i = lo; i < n; ++i) norm2 += w(i, k) * w(i, k);
    d[k] = w(k, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) {
      e[k] = 0.0;
      continue;
    }
    const double alpha = w(lo, k) > 0.0 ? -norm : norm;
    for (std::size_t i = lo; i < n; ++i) v[i] = w(i, k);
    v[lo] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = lo; i < n; ++i) vnorm2 += v[i] * v[i];
    const double inv_vnorm = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = lo; i < n; ++i) v[i] *= inv_vnorm;

    // p = A22 v, then w := p - (v.p) v; the update is A22 -= 2(v w^T + w v^T).
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t si = slo; si < sn; ++si) {
      const auto i = static_cast<std::size_t>(si);
      double s = 0.0;
      for (std::size_t j = lo; j < n; ++j) s += w(i, j) * v[j];
      p[i] = s;
    }
    double vp = 0.0;
    for (std::size_t i = lo; i < n; ++i) vp += v[i] * p[i];
    for (std::size_t i = lo; i < n; ++i) p[i] -= vp * v[i];
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t si = slo; si < sn; ++si) {
      const auto i = static_cast<std::size_t>(si);
      for (std::size_t j = lo; j < n; ++j) w(i, j) -= 2.0 * (v[i] * p[j] + p[i] * v[j]);
    }
    e[k] = alpha;
  }
  if (n >= 2) {
    d[n - 2] = w(n - 2, n - 2);
    e[n - 2] = w(n - 1, n - 2);
  }
  d[n - 1] = w(n - 1, n - 1);

  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace resq::kernels
