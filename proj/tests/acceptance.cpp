// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "resq/closed_forms.hpp"
#include "resq/energy.hpp"
#include "resq/graph.hpp"
#include "resq/resistance.hpp"
#include "resq/spectral.hpp"
#include "resq/verify.hpp"

using namespace resq;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kCorpusMaxN = 12;

struct Verdict {
  bool ok = true;
  double worst = 0.0;
  std::string note;

  void worse(double v, double tol) {
    if (!(v <= tol)) ok = false;
    worst = std::max(worst, std::isnan(v) ? INFINITY : v);
  }
};

int failures = 0;

void report(int id, const char* name, const Verdict& v) {
  std::printf("[%s] criterion %2d %-32s worst=%.3g %s\n", v.ok ? "PASS" : "FAIL", id, name, v.worst, v.note.c_str());
  if (!v.ok) ++failures;
}

double pos_diff(const Spectrum& a, const Spectrum& b) { return positional_difference(a, b); }

std::vector<Graph> random_corpus() {
  std::vector<Graph> out;
  std::mt19937_64 rng(kSeed);
  for (std::size_t i = 0; i < kCorpusSize; ++i) {
    const std::size_t n = 2 + rng() % (kCorpusMaxN - 1);
    const double prob = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    out.push_back(random_connected_graph(n, prob, mix_seed(kSeed, i)));
  }
  return out;
}

Verdict closed_form_agreement() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  auto cmp = [&](const Graph& g, const DenseMatrix& rl, const DenseMatrix& rq) {
    const ResistanceBundle b = resistance_bundle(g);
    v.worse(max_abs_diff(b.rl, rl), 1e-9);
    v.worse(max_abs_diff(b.rq, rq), 1e-9);
  };
  for (std::size_t n = 2; n <= 50; ++n)
    cmp(generate(FamilySpec::complete(n)), closed_forms::complete_rl(n), closed_forms::complete_rq(n));
  for (std::size_t p = 1; p <= 20; ++p)
    for (std::size_t q = 1; q <= 20; ++q)
      cmp(generate(FamilySpec::bipartite(p, q)), closed_forms::bipartite_rl(p, q), closed_forms::bipartite_rq(p, q));
  for (std::size_t n = 3; n <= 50; ++n)
    cmp(generate(FamilySpec::cycle(n)), closed_forms::cycle_rl(n), closed_forms::cycle_rq(n));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 30.0) v.ok = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, "runtime=%.2fs", secs);
  v.note = buf;
  return v;
}

Verdict spectrum_reproduction() {
  Verdict v;
  auto both = [&](const DenseMatrix& m, const Spectrum& expect) {
    v.worse(pos_diff(eigenvalues_symmetric(m), expect), 1e-8);
    v.worse(oracle::max_positional_diff(oracle::eigenvalues(m), expect.values), 1e-8);
  };
  for (std::size_t n = 2; n <= 50; ++n) {
    const ResistanceBundle b = resistance_bundle(generate(FamilySpec::complete(n)));
    std::vector<double> rl(n - 1, 2.0);
    rl.push_back(0.0);
    std::vector<double> rq(n - 1, 2.0 - 4.0 / n);
    rq.insert(rq.begin(), 4.0 - 4.0 / n);
    both(b.rl, Spectrum::from_values(rl));
    both(b.rq, Spectrum::from_values(rq));
    v.worse(pos_diff(closed_forms::complete_rl_spectrum(n), Spectrum::from_values(rl)), 1e-12);
  }
  for (std::size_t p = 1; p <= 20; ++p)
    for (std::size_t q = 1; q <= 20; ++q) {
      const ResistanceBundle b = resistance_bundle(generate(FamilySpec::bipartite(p, q)));
      both(b.rl, closed_forms::bipartite_rl_spectrum(p, q));
    }
  for (std::size_t n = 3; n <= 50; ++n) {
    const ResistanceBundle b = resistance_bundle(generate(FamilySpec::cycle(n)));
    const auto [rl, rq] = closed_forms::cycle_spectra(n);
    both(b.rl, rl);
    both(b.rq, rq);
  }
  return v;
}

Verdict energy_formula() {
  Verdict v;
  for (std::size_t n = 2; n <= 50; ++n) {
    const EnergyReport r = resistance_laplacian_energy(generate(FamilySpec::complete(n)));
    v.worse(std::abs(r.le_r - 4.0 * (1.0 - 1.0 / static_cast<double>(n))), 1e-9);
  }
  return v;
}

Verdict trace_identities(const std::vector<EnergyReport>& reports) {
  Verdict v;
  for (const EnergyReport& r : reports) {
    double s = 0.0;
    double s2 = 0.0;
    for (double e : r.eta) {
      s += e;
      s2 += e * e;
    }
    // normalized so both comparisons share the threshold 1
    v.worse(std::abs(s) / (1e-8 * r.n), 1.0);
    v.worse(std::abs(s2 - 2.0 * r.F) / (1e-7 * std::max(2.0 * r.F, 1e-300)), 1.0);
  }
  v.note = "(normalized by tolerance)";
  return v;
}

Verdict bounds(const std::vector<EnergyReport>& reports) {
  Verdict v;
  for (const EnergyReport& r : reports) {
    const BoundReport b = check_bounds(r, 1e-9);
    v.worse(b.slack.lower_2sqrtF, 1e-9);
    v.worse(-b.slack.upper_sqrt2nF, 1e-9);
    v.worse(-b.slack.upper_meanU, 1e-9);
    v.worse(-b.slack.upper_eta1, 1e-9);
  }
  const EnergyReport k2 = resistance_laplacian_energy(generate(FamilySpec::complete(2)));
  const double eq = std::max(std::abs(k2.bounds.slack.lower_2sqrtF), std::abs(k2.bounds.slack.upper_sqrt2nF));
  if (!(eq <= 1e-12)) v.ok = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, "K2 equality slack=%.3g", eq);
  v.note = buf;
  return v;
}

Verdict psd_radius(const std::vector<Graph>& corpus, const std::vector<ResistanceBundle>& bundles) {
  Verdict v;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DenseMatrix& rl = bundles[i].rl;
    const Spectrum s = eigenvalues_symmetric(rl);
    const double norm = rl.frobenius();
    v.worse(-s.smallest() / norm, 1e-9);
    v.worse(2.0 - s.largest(), 1e-9);
    const auto ref = oracle::eigenvalues(rl);
    v.worse(-ref.back() / norm, 1e-9);
  }
  return v;
}

Verdict monotonicity() {
  Verdict v;
  std::mt19937_64 rng(kSeed + 7);
  std::size_t pairs = 0;
  for (std::uint64_t i = 0; pairs < 200; ++i) {
    const std::size_t n = 3 + rng() % (kCorpusMaxN - 2);
    const Graph g = random_connected_graph(n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0,
                                           mix_seed(kSeed + 7, i));
    const auto missing = g.non_edges();
    if (missing.empty()) continue;
    const auto [a, b] = missing[rng() % missing.size()];
    const Graph h = g.with_edge(a, b);
    const ResistanceBundle before = resistance_bundle(g);
    const ResistanceBundle after = resistance_bundle(h);
    double grow = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) grow = std::max(grow, after.r(x, y) - before.r(x, y));
    v.worse(grow, 1e-9);
    const Spectrum sb = eigenvalues_symmetric(before.rl);
    const Spectrum sa = eigenvalues_symmetric(after.rl);
    double sgrow = 0.0;
    for (std::size_t k = 0; k < n; ++k) sgrow = std::max(sgrow, sa.values[k] - sb.values[k]);
    v.worse(sgrow, 1e-9);
    ++pairs;
  }
  v.note = std::to_string(pairs) + " pairs";
  return v;
}

Verdict trees() {
  Verdict v;
  std::mt19937_64 rng(kSeed + 13);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 14;
    const Graph t = random_tree(n, mix_seed(kSeed + 13, i));
    const ResistanceBundle b = resistance_bundle(t);
    const DenseMatrix d = classical_distance_matrix(t);
    v.worse(max_abs_diff(b.r, d), 1e-9);
    v.worse(max_abs_diff(oracle::grounded_resistance(t), d), 1e-9);
    // distance Laplacian Diag(DTr) - D
    const auto dtr = d.row_sums();
    v.worse(max_abs_diff(b.rl, diagonal(dtr) - d), 1e-9);
  }
  return v;
}

Verdict transmission_regular() {
  Verdict v;
  std::vector<FamilySpec> fams;
  for (std::size_t n = 2; n <= 30; ++n) fams.push_back(FamilySpec::complete(n));
  for (std::size_t n = 3; n <= 30; ++n) fams.push_back(FamilySpec::cycle(n));
  for (std::size_t p = 1; p <= 15; ++p) fams.push_back(FamilySpec::bipartite(p, p));
  for (const FamilySpec& f : fams) {
    const EnergyReport r = resistance_laplacian_energy(generate(f));
    v.worse(std::abs(r.le_r - r.e_r), 1e-8);
  }
  v.note = std::to_string(fams.size()) + " graphs";
  return v;
}

Verdict quotient_containment() {
  Verdict v;
  std::size_t count = 0;
  auto contain = [&](const DenseMatrix& m, const Partition& parts) {
    const Quotient q = quotient_matrix(m, parts);
    if (!q.equitable) {
      v.ok = false;
      v.note = "expected equitable partition was not";
      return;
    }
    const auto parent = oracle::eigenvalues(m);
    const Spectrum parent_spec = Spectrum::from_values(parent);
    double imag = 0.0;
    for (double e : oracle::general_eigenvalues(q.q, &imag)) v.worse(parent_spec.distance_to(e), 1e-7);
    v.worse(imag, 1e-7);
    ++count;
  };
  for (std::size_t p = 1; p <= 8; ++p)
    for (std::size_t q = 1; q <= 8; ++q) {
      const Graph g = generate(FamilySpec::bipartite(p, q));
      const ResistanceBundle b = resistance_bundle(g);
      Partition parts;
      parts.blocks.resize(2);
      for (std::size_t x = 0; x < p + q; ++x) parts.blocks[x < p ? 0 : 1].push_back(x);
      contain(laplacian(g), parts);
      contain(b.rl, parts);
      contain(b.rq, parts);
    }
  // even cycles: even / odd positions; complete graphs: any split
  for (std::size_t n = 4; n <= 20; n += 2) {
    const ResistanceBundle b = resistance_bundle(generate(FamilySpec::cycle(n)));
    Partition parts;
    parts.blocks.resize(2);
    for (std::size_t x = 0; x < n; ++x) parts.blocks[x % 2].push_back(x);
    contain(b.rl, parts);
    contain(b.rq, parts);
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    const ResistanceBundle b = resistance_bundle(generate(FamilySpec::complete(n)));
    Partition parts;
    parts.blocks.resize(3);
    for (std::size_t x = 0; x < n; ++x) parts.blocks[x == 0 ? 0 : x < n / 2 + 1 ? 1 : 2].push_back(x);
    if (parts.blocks[2].empty()) parts.blocks.pop_back();
    contain(b.rl, parts);
    contain(b.rq, parts);
  }
  if (v.note.empty()) v.note = std::to_string(count) + " quotients";
  return v;
}

Verdict discrepancy_report() {
  Verdict v;
  verify::Options opt;
  opt.scope = verify::Scope::Families;
  const verify::Report r = verify::run(opt);
  std::size_t rows = 0;
  bool flagged = false;
  for (const auto& d : r.discrepancies) {
    if (d.p > 8 || d.q > 8) continue;
    ++rows;
    v.worse(d.corrected_error, 1e-8);
    if (d.p == 2 && d.q == 2) flagged = !d.published_matches;
  }
  if (rows != 64 || !flagged) v.ok = false;
  v.note = std::to_string(rows) + " rows, (2,2) published " + (flagged ? "flagged" : "NOT flagged");
  return v;
}

}  // namespace

int main() {
  const std::vector<Graph> corpus = random_corpus();
  std::vector<ResistanceBundle> bundles;
  std::vector<EnergyReport> reports;
  for (const Graph& g : corpus) {
    bundles.push_back(resistance_bundle(g));
    reports.push_back(energy_report(bundles.back()));
  }

  report(1, "closed-form agreement", closed_form_agreement());
  report(2, "spectrum reproduction", spectrum_reproduction());
  report(3, "energy formula K_n", energy_formula());
  report(4, "trace identities", trace_identities(reports));
  report(5, "energy bounds", bounds(reports));
  report(6, "PSD and spectral radius", psd_radius(corpus, bundles));
  report(7, "edge-addition monotonicity", monotonicity());
  report(8, "tree equivalence", trees());
  report(9, "transmission-regular equality", transmission_regular());
  report(10, "quotient containment", quotient_containment());
  report(11, "discrepancy report", discrepancy_report());

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
