#pragma once

#include <span>
#include <utility>
#include <vector>

#include "resq/matrix.hpp"

namespace resq {

/// Default tolerance for grouping eigenvalues into multiplicities.
inline constexpr double kMultiplicityTol = 1e-7;
/// Relative asymmetry accepted by the eigensolver.
inline constexpr double kSymmetryTol = 1e-12;

/// Real eigenvalues sorted descending, plus a tolerance-grouped view of the
/// distinct values and their multiplicities.
struct Spectrum {
  std::vector<double> values;
  double tol = kMultiplicityTol;
  std::vector<std::pair<double, std::size_t>> multiplicities;

  /// Sorts descending and groups: a value joins the current group while it
  /// is within `tol` of the group's first (largest) member.
  static Spectrum from_values(std::vector<double> values, double tol = kMultiplicityTol);

  std::size_t size() const noexcept { return values.size(); }
  double sum() const noexcept;
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  /// Distance from `value` to the closest eigenvalue.
  double distance_to(double value) const noexcept;
};

/// max_i |a_i - b_i| after both are sorted descending. Throws
/// DimensionMismatch when the lengths differ.
double positional_difference(const Spectrum& a, const Spectrum& b);

/// Disjoint nonempty vertex blocks covering 0..n-1.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  /// Throws InvalidPartition.
  void validate(std::size_t n) const;
};

struct Quotient {
  DenseMatrix q;
  bool equitable = false;
};

/// Throws NotSymmetric when asymmetry(m) exceeds kSymmetryTol.
Spectrum eigenvalues_symmetric(const DenseMatrix& m, double tol = kMultiplicityTol);

/// q[s][t] is the average row sum of block (s,t). The partition is equitable
/// when each block has constant row sums within `tol * max(1, max|m_ij|)`.
Quotient quotient_matrix(const DenseMatrix& m, const Partition& partition, double tol = 1e-9);

/// Eigenvalues of the circulant with the given first row: the polynomial
/// c0 + c1 z + ... + c_{n-1} z^{n-1} at every n-th root of unity. Throws
/// NonRealSpectrum when an imaginary part exceeds `imag_tol * max(1, sum|c_k|)`.
Spectrum circulant_eigenvalues(std::span<const double> first_row, double imag_tol = 1e-9,
                               double tol = kMultiplicityTol);

/// Dense circulant: row i is the first row cyclically shifted right by i.
DenseMatrix circulant_matrix(std::span<const double> first_row);

enum class ShiftSign { L, Q };

/// Spectrum of R^L (k - gamma) or R^Q (k + gamma) of a k-transmission
/// regular graph from the spectrum of its resistance matrix.
Spectrum shift_spectrum_transmission_regular(double k, const Spectrum& r_spectrum, ShiftSign sign);

}  // namespace resq
