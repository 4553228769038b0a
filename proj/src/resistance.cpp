#include "resq/resistance.hpp"

#include <cmath>

#include "resq/error.hpp"
#include "resq/kernels.hpp"

namespace resq {
namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::Disconnected,
                "graph with " + std::to_string(g.order()) + " vertices is not connected");
  }
}

// (L + J)^{-1}; differs from L^+ by J/n^2, which resistance differences cancel.
DenseMatrix shifted_inverse(const DenseMatrix& laplacian) {
  DenseMatrix shifted = laplacian;
  for (double& v : shifted.data()) v += 1.0;
  auto inv = kernels::spd_inverse(shifted);
  if (!inv) throw Error(ErrorKind::Disconnected, "Laplacian has a null space of dimension >= 2");
  return *std::move(inv);
}

}  // namespace

DenseMatrix laplacian_pseudoinverse(const DenseMatrix& laplacian, std::size_t n) {
  if (!laplacian.square() || laplacian.rows() != n) {
    throw Error(ErrorKind::DimensionMismatch, "Laplacian order does not match n");
  }
  if (n == 0) return {};
  DenseMatrix pinv = shifted_inverse(laplacian);
  const double shift = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (double& v : pinv.data()) v -= shift;
  return pinv;
}

DenseMatrix resistance_matrix(const Graph& g) {
  require_connected(g);
  if (g.order() <= 1) return DenseMatrix(g.order());
  return kernels::resistance_from_pinv(shifted_inverse(laplacian(g)));
}

std::vector<double> resistance_transmissions(const DenseMatrix& r) {
  std::vector<double> rtr(r.cols(), 0.0);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) rtr[j] += r(i, j);
  return rtr;
}

DenseMatrix resistance_laplacian_from(const DenseMatrix& r, std::span<const double> rtr) {
  if (rtr.size() != r.rows()) throw Error(ErrorKind::DimensionMismatch, "transmission vector length");
  return diagonal(rtr) - r;
}

DenseMatrix resistance_signless_laplacian_from(const DenseMatrix& r, std::span<const double> rtr) {
  if (rtr.size() != r.rows()) throw Error(ErrorKind::DimensionMismatch, "transmission vector length");
#ifdef RESQ_FAULT_RQ_SIGN
  // Fault-injection build: deliberately wrong sign, used to prove that the
  // verification suite notices.
  return diagonal(rtr) - r;
#else
  return diagonal(rtr) + r;
#endif
}

DenseMatrix resistance_laplacian(const Graph& g) {
  const DenseMatrix r = resistance_matrix(g);
  return resistance_laplacian_from(r, resistance_transmissions(r));
}

DenseMatrix resistance_signless_laplacian(const Graph& g) {
  const DenseMatrix r = resistance_matrix(g);
  return resistance_signless_laplacian_from(r, resistance_transmissions(r));
}

ResistanceBundle resistance_bundle(const Graph& g) {
  ResistanceBundle b;
  b.r = resistance_matrix(g);
  b.rtr = resistance_transmissions(b.r);
  b.rl = resistance_laplacian_from(b.r, b.rtr);
  b.rq = resistance_signless_laplacian_from(b.r, b.rtr);
  return b;
}

std::optional<double> is_transmission_regular(std::span<const double> rtr, double tol) {
  if (rtr.empty()) return std::nullopt;
  for (double t : rtr)
    if (std::abs(t - rtr.front()) > tol) return std::nullopt;
  return rtr.front();
}

}  // namespace resq
