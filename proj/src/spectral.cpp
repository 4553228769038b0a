#include "resq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "resq/error.hpp"
#include "resq/kernels.hpp"

namespace resq {

Spectrum Spectrum::from_values(std::vector<double> values, double tol) {
  Spectrum s;
  s.tol = tol;
  std::sort(values.begin(), values.end(), std::greater<>());
  s.values = std::move(values);
  // Each group is reported by its mean.
  std::size_t first = 0;
  while (first < s.values.size()) {
    std::size_t last = first + 1;
    double total = s.values[first];
    while (last < s.values.size() && s.values[first] - s.values[last] <= tol) total += s.values[last++];
    s.multiplicities.emplace_back(total / static_cast<double>(last - first), last - first);
    first = last;
  }
  return s;
}

double Spectrum::sum() const noexcept {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double Spectrum::distance_to(double value) const noexcept {
  double best = INFINITY;
  for (double v : values) best = std::min(best, std::abs(v - value));
  return best;
}

double positional_difference(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "spectra of different lengths " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

void Partition::validate(std::size_t n) const {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::InvalidPartition, "block " + std::to_string(b) + " is empty");
    for (std::size_t v : blocks[b]) {
      if (v >= n) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(v) + " out of range");
      if (seen[v]) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(v) + " in two blocks");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) {
    throw Error(ErrorKind::InvalidPartition,
                "blocks cover " + std::to_string(covered) + " of " + std::to_string(n) + " indices");
  }
}

Spectrum eigenvalues_symmetric(const DenseMatrix& m, double tol) {
  if (!m.square()) throw Error(ErrorKind::NotSymmetric, "matrix is not square");
  if (asymmetry(m) > kSymmetryTol) {
    throw Error(ErrorKind::NotSymmetric, "relative asymmetry " + std::to_string(asymmetry(m)));
  }
  return Spectrum::from_values(kernels::symmetric_eigenvalues(m), tol);
}

Quotient quotient_matrix(const DenseMatrix& m, const Partition& partition, double tol) {
  if (!m.square()) throw Error(ErrorKind::InvalidPartition, "matrix is not square");
  partition.validate(m.rows());
  const std::size_t k = partition.blocks.size();
  const double threshold = tol * std::max(1.0, m.max_abs());
  Quotient out{DenseMatrix(k), true};
  for (std::size_t s = 0; s < k; ++s) {
    const auto& rows = partition.blocks[s];
    for (std::size_t t = 0; t < k; ++t) {
      const auto& cols = partition.blocks[t];
      double lo = INFINITY;
      double hi = -INFINITY;
      double total = 0.0;
      for (std::size_t i : rows) {
        double row_sum = 0.0;
        for (std::size_t j : cols) row_sum += m(i, j);
        lo = std::min(lo, row_sum);
        hi = std::max(hi, row_sum);
        total += row_sum;
      }
      out.q(s, t) = total / static_cast<double>(rows.size());
      if (hi - lo > threshold) out.equitable = false;
    }
  }
  return out;
}

Spectrum circulant_eigenvalues(std::span<const double> first_row, double imag_tol, double tol) {
  const std::size_t n = first_row.size();
  double scale = 1.0;
  {
    double l1 = 0.0;
    for (double c : first_row) l1 += std::abs(c);
    scale = std::max(scale, l1);
  }
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce the exponent mod n before forming the angle.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
      re += first_row[j] * std::cos(angle);
      im += first_row[j] * std::sin(angle);
    }
    if (std::abs(im) > imag_tol * scale) {
      throw Error(ErrorKind::NonRealSpectrum,
                  "eigenvalue " + std::to_string(k) + " has imaginary part " + std::to_string(im));
    }
    values[k] = re;
  }
  return Spectrum::from_values(std::move(values), tol);
}

DenseMatrix circulant_matrix(std::span<const double> first_row) {
  const std::size_t n = first_row.size();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = first_row[(j + n - i) % n];
  return c;
}

Spectrum shift_spectrum_transmission_regular(double k, const Spectrum& r_spectrum, ShiftSign sign) {
  std::vector<double> shifted;
  shifted.reserve(r_spectrum.size());
  for (double gamma : r_spectrum.values) shifted.push_back(sign == ShiftSign::L ? k - gamma : k + gamma);
  return Spectrum::from_values(std::move(shifted), r_spectrum.tol);
}

}  // namespace resq
