#include "resq/energy.hpp"

#include <cmath>

#include "resq/error.hpp"

namespace resq {
namespace {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double clamped_sqrt(double radicand, const char* which, bool& clamped) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kRadicandClamp) {
    clamped = true;
    return 0.0;
  }
  throw Error(ErrorKind::NegativeRadicand, std::string(which) + " radicand " + std::to_string(radicand));
}

}  // namespace

std::vector<double> eta_values(const Spectrum& rl_spectrum, std::span<const double> rtr) {
  if (rl_spectrum.size() != rtr.size()) {
    throw Error(ErrorKind::DimensionMismatch, "spectrum has " + std::to_string(rl_spectrum.size()) +
                                                  " values, transmissions " + std::to_string(rtr.size()));
  }
  const double shift = mean(rtr);
  std::vector<double> eta;
  eta.reserve(rtr.size());
  for (double gamma : rl_spectrum.values) eta.push_back(gamma - shift);
  return eta;
}

SquareSums f_and_F(const DenseMatrix& r, std::span<const double> rtr) {
  if (r.rows() != rtr.size()) throw Error(ErrorKind::DimensionMismatch, "transmission vector length");
  SquareSums out;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = i + 1; j < r.cols(); ++j) out.f += r(i, j) * r(i, j);
  const double mu = mean(rtr);
  double spread = 0.0;
  for (double u : rtr) spread += (u - mu) * (u - mu);
  out.F = out.f + 0.5 * spread;
  return out;
}

BoundReport check_bounds(const EnergyReport& report, double tol) {
  BoundReport out;
  const double n = static_cast<double>(report.n);
  const double F = report.F;
  const double mu = report.mean_transmission;
  const double eta1 = report.eta.empty() ? 0.0 : report.eta.front();
  auto& b = out.bounds;
  b.lower_2sqrtF = 2.0 * clamped_sqrt(F, "F", out.clamped);
  b.upper_sqrt2nF = clamped_sqrt(2.0 * n * F, "2nF", out.clamped);
  const double rest = std::max(n - 1.0, 0.0);
  b.upper_meanU = mu + clamped_sqrt(rest * (2.0 * F - mu * mu), "mean-transmission bound", out.clamped);
  b.upper_eta1 = eta1 + clamped_sqrt(rest * (2.0 * F - eta1 * eta1), "eta_1 bound", out.clamped);

  const double le = report.le_r;
  out.slack = {b.lower_2sqrtF - le, b.upper_sqrt2nF - le, b.upper_meanU - le, b.upper_eta1 - le};
  out.lower_2sqrtF = out.slack.lower_2sqrtF <= tol;
  out.upper_sqrt2nF = out.slack.upper_sqrt2nF >= -tol;
  out.upper_meanU = out.slack.upper_meanU >= -tol;
  out.upper_eta1 = out.slack.upper_eta1 >= -tol;
  return out;
}

EnergyReport energy_report(const ResistanceBundle& bundle, double tol) {
  EnergyReport rep;
  rep.n = bundle.rtr.size();
  rep.transmissions = bundle.rtr;
  rep.mean_transmission = mean(bundle.rtr);
  rep.rl_spectrum = eigenvalues_symmetric(bundle.rl);
  rep.r_spectrum = eigenvalues_symmetric(bundle.r);
  rep.eta = eta_values(rep.rl_spectrum, bundle.rtr);
  const auto sums = f_and_F(bundle.r, bundle.rtr);
  rep.f = sums.f;
  rep.F = sums.F;
  for (double e : rep.eta) rep.le_r += std::abs(e);
  for (double g : rep.r_spectrum.values) rep.e_r += std::abs(g);
  rep.bounds = check_bounds(rep, tol);
  return rep;
}

EnergyReport resistance_laplacian_energy(const Graph& g, double tol) {
  auto rep = energy_report(resistance_bundle(g), tol);
  rep.graph_tag = g.edge_hash();
  return rep;
}

double resistance_energy(const Graph& g) {
  double total = 0.0;
  for (double gamma : eigenvalues_symmetric(resistance_matrix(g)).values) total += std::abs(gamma);
  return total;
}

}  // namespace resq
