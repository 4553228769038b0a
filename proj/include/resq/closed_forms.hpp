#pragma once

#include <array>
#include <utility>

#include "resq/graph.hpp"
#include "resq/matrix.hpp"
#include "resq/spectral.hpp"

namespace resq::closed_forms {

/// Analytic R^L and R^Q together with their spectra for one family instance.
struct ClosedForm {
  FamilySpec family;
  DenseMatrix rl_matrix;
  DenseMatrix rq_matrix;
  Spectrum rl_spectrum;
  Spectrum rq_spectrum;
};

// Complete graph K_n, n >= 1.
DenseMatrix complete_rl(std::size_t n);  ///< 2I - (2/n)J
DenseMatrix complete_rq(std::size_t n);  ///< (2/n)J + (2 - 4/n)I
Spectrum complete_rl_spectrum(std::size_t n);
Spectrum complete_rq_spectrum(std::size_t n);

// Complete bipartite K_{p,q}; vertices 0..p-1 form the first part.
DenseMatrix bipartite_rl(std::size_t p, std::size_t q);
DenseMatrix bipartite_rq(std::size_t p, std::size_t q);
Spectrum bipartite_rl_spectrum(std::size_t p, std::size_t q);

/// 2x2 matrix of block row sums of bipartite_rq(p, q). Its two eigenvalues
/// complete the R^Q spectrum.
DenseMatrix bipartite_rq_quotient(std::size_t p, std::size_t q);
Spectrum bipartite_rq_spectrum(std::size_t p, std::size_t q);

/// The published two-eigenvalue expression for R^Q(K_{p,q}), read literally
/// with the radical over 9p^2 - 14pq + 9q^2(p+q-1). It does not agree with
/// the spectrum (at p = q = 2 the true pair is {5, 2}); it is kept only so
/// the verification report can show the discrepancy. Returned as (+, -).
std::pair<double, double> published_rq_pair(std::size_t p, std::size_t q);

/// The published quotient matrix for R^Q(K_{p,q}); its diagonal adds
/// 2(p-2)/q + 2(p-1)/q where the block row sum is 2(p-2)/q + 2p/q.
DenseMatrix published_rq_quotient(std::size_t p, std::size_t q);

// Cycle C_n, n >= 3: circulants with first row h, -/+ k(n-k)/n.
DenseMatrix cycle_rl(std::size_t n);
DenseMatrix cycle_rq(std::size_t n);
/// h - g(w^k) and h + g(w^k), h = (n^2 - 1)/6, w a primitive n-th root of unity.
std::pair<Spectrum, Spectrum> cycle_spectra(std::size_t n);

/// Eigenvalues of a 2x2 matrix with real spectrum, descending.
std::array<double, 2> eigenvalues_2x2(const DenseMatrix& m);

/// Throws InvalidFamilyParams for paths, which have no closed form here.
ClosedForm closed_form(const FamilySpec& family);

}  // namespace resq::closed_forms
