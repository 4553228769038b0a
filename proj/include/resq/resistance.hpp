#pragma once

#include <optional>
#include <span>
#include <vector>

#include "resq/graph.hpp"
#include "resq/matrix.hpp"

namespace resq {

/// Default absolute tolerance for transmission regularity.
inline constexpr double kTransmissionTol = 1e-9;

/// Resistance distances of a connected graph with everything derived from
/// them.
struct ResistanceBundle {
  DenseMatrix r;             ///< r(i,j), symmetric, zero diagonal
  std::vector<double> rtr;   ///< RTr(v) = sum_u r(u,v)
  DenseMatrix rl;            ///< Diag(RTr) - R
  DenseMatrix rq;            ///< Diag(RTr) + R
};

/// Moore-Penrose pseudoinverse of the Laplacian of a connected graph of
/// order n. Computed as (L + J)^{-1} - J/n^2, which is exact when the null
/// space of L is spanned by the all-ones vector. Throws Disconnected when
/// L + J is not positive definite.
DenseMatrix laplacian_pseudoinverse(const DenseMatrix& laplacian, std::size_t n);

/// Effective resistance between every pair of vertices, unit resistor per
/// edge. Throws Disconnected.
DenseMatrix resistance_matrix(const Graph& g);

/// Column sums of R.
std::vector<double> resistance_transmissions(const DenseMatrix& r);

DenseMatrix resistance_laplacian(const Graph& g);
DenseMatrix resistance_signless_laplacian(const Graph& g);

/// R^L and R^Q assembled from an already computed resistance matrix.
DenseMatrix resistance_laplacian_from(const DenseMatrix& r, std::span<const double> rtr);
DenseMatrix resistance_signless_laplacian_from(const DenseMatrix& r, std::span<const double> rtr);

ResistanceBundle resistance_bundle(const Graph& g);

/// The common transmission k when every entry is within `tol` of rtr[0].
std::optional<double> is_transmission_regular(std::span<const double> rtr, double tol = kTransmissionTol);

}  // namespace resq
