#include "resq/closed_forms.hpp"

#include <cmath>

#include "resq/error.hpp"

namespace resq::closed_forms {
namespace {

double as_real(std::size_t x) { return static_cast<double>(x); }

void require_complete(std::size_t n) { FamilySpec::complete(n).validate(); }
void require_bipartite(std::size_t p, std::size_t q) { FamilySpec::bipartite(p, q).validate(); }
void require_cycle(std::size_t n) { FamilySpec::cycle(n).validate(); }

// Fills the square block [r0, r0+rows) x [c0, c0+cols) with a*I + b*J
// (the identity part only on diagonal blocks).
void fill_block(DenseMatrix& m, std::size_t r0, std::size_t rows, std::size_t c0, std::size_t cols,
                double identity_coef, double ones_coef) {
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(r0 + i, c0 + j) = ones_coef + (r0 == c0 && i == j ? identity_coef : 0.0);
}

// (p+q-1)/p: resistance between the two parts, times q.
double cross_share(double p, double q) { return (p + q - 1.0) / p; }

std::vector<double> cycle_resistance_row(std::size_t n) {
  std::vector<double> row(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) row[k] = as_real(k) * as_real(n - k) / as_real(n);
  return row;
}

double cycle_transmission(std::size_t n) { return (as_real(n) * as_real(n) - 1.0) / 6.0; }

}  // namespace

DenseMatrix complete_rl(std::size_t n) {
  require_complete(n);
  const double nn = as_real(n);
  DenseMatrix m(n, n, -2.0 / nn);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += 2.0;
  return m;
}

DenseMatrix complete_rq(std::size_t n) {
  require_complete(n);
  const double nn = as_real(n);
  DenseMatrix m(n, n, 2.0 / nn);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += 2.0 - 4.0 / nn;
  return m;
}

Spectrum complete_rl_spectrum(std::size_t n) {
  require_complete(n);
  std::vector<double> v(n, 2.0);
  v.back() = 0.0;
  return Spectrum::from_values(std::move(v));
}

Spectrum complete_rq_spectrum(std::size_t n) {
  require_complete(n);
  const double nn = as_real(n);
  std::vector<double> v(n, 2.0 - 4.0 / nn);
  v.front() = 4.0 - 4.0 / nn;
  return Spectrum::from_values(std::move(v));
}

DenseMatrix bipartite_rl(std::size_t p, std::size_t q) {
  require_bipartite(p, q);
  const double fp = as_real(p);
  const double fq = as_real(q);
  const double cross = -(fp + fq - 1.0) / (fp * fq);
  DenseMatrix m(p + q);
  fill_block(m, 0, p, 0, p, 2.0 * fp / fq + cross_share(fp, fq), -2.0 / fq);
  fill_block(m, 0, p, p, q, 0.0, cross);
  fill_block(m, p, q, 0, p, 0.0, cross);
  fill_block(m, p, q, p, q, 2.0 * fq / fp + cross_share(fq, fp), -2.0 / fp);
  return m;
}

DenseMatrix bipartite_rq(std::size_t p, std::size_t q) {
  require_bipartite(p, q);
  const double fp = as_real(p);
  const double fq = as_real(q);
  const double cross = (fp + fq - 1.0) / (fp * fq);
  DenseMatrix m(p + q);
  fill_block(m, 0, p, 0, p, 2.0 * (fp - 2.0) / fq + cross_share(fp, fq), 2.0 / fq);
  fill_block(m, 0, p, p, q, 0.0, cross);
  fill_block(m, p, q, 0, p, 0.0, cross);
  fill_block(m, p, q, p, q, 2.0 * (fq - 2.0) / fp + cross_share(fq, fp), 2.0 / fp);
  return m;
}

Spectrum bipartite_rl_spectrum(std::size_t p, std::size_t q) {
  require_bipartite(p, q);
  const double fp = as_real(p);
  const double fq = as_real(q);
  std::vector<double> v{0.0, ((fp + fq) * (fp + fq) - fp - fq) / (fp * fq)};
  v.insert(v.end(), p - 1, 2.0 * fp / fq + cross_share(fp, fq));
  v.insert(v.end(), q - 1, 2.0 * fq / fp + cross_share(fq, fp));
  return Spectrum::from_values(std::move(v));
}

DenseMatrix bipartite_rq_quotient(std::size_t p, std::size_t q) {
  require_bipartite(p, q);
  const double fp = as_real(p);
  const double fq = as_real(q);
  return DenseMatrix::from_rows({
      {2.0 * (2.0 * fp - 2.0) / fq + cross_share(fp, fq), cross_share(fp, fq)},
      {cross_share(fq, fp), 2.0 * (2.0 * fq - 2.0) / fp + cross_share(fq, fp)},
  });
}

Spectrum bipartite_rq_spectrum(std::size_t p, std::size_t q) {
  const auto pair = eigenvalues_2x2(bipartite_rq_quotient(p, q));
  const double fp = as_real(p);
  const double fq = as_real(q);
  std::vector<double> v{pair[0], pair[1]};
  v.insert(v.end(), p - 1, 2.0 * (fp - 2.0) / fq + cross_share(fp, fq));
  v.insert(v.end(), q - 1, 2.0 * (fq - 2.0) / fp + cross_share(fq, fp));
  return Spectrum::from_values(std::move(v));
}

std::pair<double, double> published_rq_pair(std::size_t p, std::size_t q) {
  require_bipartite(p, q);
  const double fp = as_real(p);
  const double fq = as_real(q);
  const double base = 5.0 * fp * fp + (2.0 * fp - 5.0) * fq + 5.0 * fq * fq - 5.0 * fp;
  const double radicand = 9.0 * fp * fp - 14.0 * fp * fq + 9.0 * fq * fq * (fp + fq - 1.0);
  const double root = std::sqrt(std::max(radicand, 0.0));
  const double denom = 2.0 * fp * fq;
  return {(base + root) / denom, (base - root) / denom};
}

DenseMatrix published_rq_quotient(std::size_t p, std::size_t q) {
  require_bipartite(p, q);
  const double fp = as_real(p);
  const double fq = as_real(q);
  return DenseMatrix::from_rows({
      {2.0 * (fp - 2.0) / fq + 2.0 * (fp - 1.0) / fq + cross_share(fp, fq), cross_share(fp, fq)},
      {cross_share(fq, fp), 2.0 * (fq - 2.0) / fp + 2.0 * (fq - 1.0) / fp + cross_share(fq, fp)},
  });
}

DenseMatrix cycle_rl(std::size_t n) {
  require_cycle(n);
  auto row = cycle_resistance_row(n);
  for (double& v : row) v = -v;
  row[0] = cycle_transmission(n);
  return circulant_matrix(row);
}

DenseMatrix cycle_rq(std::size_t n) {
  require_cycle(n);
  auto row = cycle_resistance_row(n);
  row[0] = cycle_transmission(n);
  return circulant_matrix(row);
}

std::pair<Spectrum, Spectrum> cycle_spectra(std::size_t n) {
  require_cycle(n);
  const double h = cycle_transmission(n);
  // g(w^k) are the eigenvalues of the resistance circulant.
  const Spectrum g = circulant_eigenvalues(cycle_resistance_row(n));
  std::vector<double> rl;
  std::vector<double> rq;
  for (double gk : g.values) {
    rl.push_back(h - gk);
    rq.push_back(h + gk);
  }
  return {Spectrum::from_values(std::move(rl)), Spectrum::from_values(std::move(rq))};
}

std::array<double, 2> eigenvalues_2x2(const DenseMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a 2x2 matrix");
  const double half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const double half_gap = 0.5 * (m(0, 0) - m(1, 1));
  const double disc = half_gap * half_gap + m(0, 1) * m(1, 0);
  if (disc < 0.0) throw Error(ErrorKind::NonRealSpectrum, "2x2 matrix has complex eigenvalues");
  const double root = std::sqrt(disc);
  return {half_trace + root, half_trace - root};
}

ClosedForm closed_form(const FamilySpec& family) {
  family.validate();
  switch (family.kind) {
    case FamilyKind::Complete:
      return {family, complete_rl(family.a), complete_rq(family.a), complete_rl_spectrum(family.a),
              complete_rq_spectrum(family.a)};
    case FamilyKind::CompleteBipartite:
      return {family, bipartite_rl(family.a, family.b), bipartite_rq(family.a, family.b),
              bipartite_rl_spectrum(family.a, family.b), bipartite_rq_spectrum(family.a, family.b)};
    case FamilyKind::Cycle: {
      auto [rl, rq] = cycle_spectra(family.a);
      return {family, cycle_rl(family.a), cycle_rq(family.a), std::move(rl), std::move(rq)};
    }
    case FamilyKind::Path:
      break;
  }
  throw Error(ErrorKind::InvalidFamilyParams, "no closed form for " + family.tag());
}

}  // namespace resq::closed_forms
