#pragma once

#include <span>
#include <string>
#include <vector>

#include "resq/graph.hpp"
#include "resq/matrix.hpp"
#include "resq/resistance.hpp"
#include "resq/spectral.hpp"

namespace resq {

/// Default slack allowed when checking a bound.
inline constexpr double kBoundTol = 1e-9;
/// Radicands this far below zero are treated as rounding and clamped.
inline constexpr double kRadicandClamp = 1e-9;

struct EnergyBounds {
  double lower_2sqrtF = 0.0;   ///< 2 sqrt(F)
  double upper_sqrt2nF = 0.0;  ///< sqrt(2nF)
  double upper_meanU = 0.0;    ///< mean U + sqrt((n-1)(2F - mean U^2))
  double upper_eta1 = 0.0;     ///< eta_1 + sqrt((n-1)(2F - eta_1^2))
};

struct BoundReport {
  EnergyBounds bounds;
  /// bound - LE_R for every bound, signed. The lower bound holds when its
  /// slack is <= tol, the upper bounds when theirs is >= -tol.
  EnergyBounds slack;
  bool lower_2sqrtF = false;
  bool upper_sqrt2nF = false;
  bool upper_meanU = false;
  bool upper_eta1 = false;
  /// Set when a radicand in (-kRadicandClamp, 0) was clamped to zero.
  bool clamped = false;

  bool all_satisfied() const noexcept { return lower_2sqrtF && upper_sqrt2nF && upper_meanU && upper_eta1; }
};

struct EnergyReport {
  std::size_t n = 0;
  std::vector<double> transmissions;  ///< U_j = RTr(j)
  double mean_transmission = 0.0;
  Spectrum rl_spectrum;
  Spectrum r_spectrum;
  std::vector<double> eta;  ///< follows rl_spectrum's descending order
  double f = 0.0;
  double F = 0.0;
  double le_r = 0.0;
  double e_r = 0.0;
  BoundReport bounds;
  std::string graph_tag;  ///< family tag or edge hash
};

struct SquareSums {
  double f = 0.0;  ///< sum over unordered pairs of r(i,j)^2
  double F = 0.0;  ///< f + (1/2) sum (U_i - mean U)^2
};

/// eta_i = gamma_i^L - mean(U). Throws DimensionMismatch.
std::vector<double> eta_values(const Spectrum& rl_spectrum, std::span<const double> rtr);

SquareSums f_and_F(const DenseMatrix& r, std::span<const double> rtr);

/// Full report including the bound evaluation. Throws Disconnected.
EnergyReport resistance_laplacian_energy(const Graph& g, double tol = kBoundTol);

/// Same, from a precomputed bundle.
EnergyReport energy_report(const ResistanceBundle& bundle, double tol = kBoundTol);

/// Sum of |gamma_i| over the spectrum of R. Throws Disconnected.
double resistance_energy(const Graph& g);

/// Evaluates the four bounds for a populated report. Throws NegativeRadicand
/// when a radicand is below -kRadicandClamp.
BoundReport check_bounds(const EnergyReport& report, double tol = kBoundTol);

}  // namespace resq
