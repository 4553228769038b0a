#include "resq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "resq/closed_forms.hpp"
#include "resq/energy.hpp"
#include "resq/error.hpp"
#include "resq/graph.hpp"
#include "resq/io.hpp"
#include "resq/kernels.hpp"
#include "resq/resistance.hpp"
#include "resq/spectral.hpp"

namespace resq::verify {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSpectrumTol = 1e-8;
constexpr double kQuotientTol = 1e-7;
constexpr double kEtaSumTol = 1e-8;
constexpr double kEtaSquareTol = 1e-7;
constexpr double kEqualityTol = 1e-12;
constexpr std::size_t kQuotientMaxPart = 8;
constexpr std::size_t kTreeMaxOrder = 15;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// NaN counts as an infinite violation.
double sanitize(double v) { return std::isnan(v) ? kInf : std::max(v, 0.0); }

struct Sample {
  const char* check;
  double tol;
  double violation;
  double ms;
};

class Registry {
 public:
  void record(const std::string& check, double tol, double violation, double ms, const Graph* g,
              const std::string& where) {
    auto [it, inserted] = index_.try_emplace(check, outcomes_.size());
    if (inserted) {
      Outcome o;
      o.check = check;
      o.tolerance = tol;
      o.status = Status::Pass;
      outcomes_.push_back(std::move(o));
    }
    Outcome& o = outcomes_[it->second];
    violation = sanitize(violation);
    ++o.instances;
    o.elapsed_ms += ms;
    o.measured = std::max(o.measured, violation);
    if (violation > o.tolerance && o.status != Status::Fail) {
      o.status = Status::Fail;
      o.detail = "first violation on " + where;
      if (g != nullptr) o.graph = format_edge_list(*g);
    }
  }

  // Runs `fn`, which returns a violation, and records it with its timing.
  template <class Fn>
  void measure(const std::string& check, double tol, const Graph& g, const std::string& where, Fn&& fn) {
    const auto start = Clock::now();
    double violation = kInf;
    std::string error;
    try {
      violation = fn();
    } catch (const std::exception& e) {
      error = e.what();
    }
    record(check, tol, violation, elapsed_ms(start), &g, error.empty() ? where : where + " (" + error + ")");
  }

  void skip(const std::string& check, double tol, const std::string& why) {
    Outcome o;
    o.check = check;
    o.tolerance = tol;
    o.status = Status::Skip;
    o.detail = why;
    index_.try_emplace(check, outcomes_.size());
    outcomes_.push_back(std::move(o));
  }

  std::vector<Outcome> take() { return std::move(outcomes_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<Outcome> outcomes_;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(hi - lo + 1));
}

double spectral_norm(const Spectrum& s) {
  return s.size() == 0 ? 0.0 : std::max(std::abs(s.largest()), std::abs(s.smallest()));
}

// Largest amount by which the triangle inequality fails over all triples.
double triangle_violation(const DenseMatrix& r) {
  const std::size_t n = r.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, r(i, k) - r(i, j) - r(j, k));
  return worst;
}

// ---------------------------------------------------------------------------
// Family instances

void check_transmission_regular(Registry& reg, const Graph& g, const std::string& tag, const ResistanceBundle& b,
                                const EnergyReport& rep) {
  reg.measure("energy.transmission_regular_equality", kSpectrumTol, g, tag,
              [&] { return std::abs(rep.le_r - rep.e_r); });
  reg.measure("spectrum.transmission_regular_shift", kSpectrumTol, g, tag, [&] {
    const auto k = is_transmission_regular(b.rtr);
    if (!k) return kInf;
    const Spectrum rq = eigenvalues_symmetric(b.rq);
    return std::max(
        positional_difference(shift_spectrum_transmission_regular(*k, rep.r_spectrum, ShiftSign::L), rep.rl_spectrum),
        positional_difference(shift_spectrum_transmission_regular(*k, rep.r_spectrum, ShiftSign::Q), rq));
  });
}

void run_complete(Registry& reg, const Options& opt) {
  for (std::size_t n = 2; n <= opt.max_n; ++n) {
    const Graph g = generate(FamilySpec::complete(n));
    const std::string tag = FamilySpec::complete(n).tag();
    const ResistanceBundle b = resistance_bundle(g);
    reg.measure("closed_form.complete.rl", opt.tol, g, tag,
                [&] { return max_abs_diff(b.rl, closed_forms::complete_rl(n)); });
    reg.measure("closed_form.complete.rq", opt.tol, g, tag,
                [&] { return max_abs_diff(b.rq, closed_forms::complete_rq(n)); });
    reg.measure("spectrum.complete.rl", kSpectrumTol, g, tag, [&] {
      return positional_difference(eigenvalues_symmetric(b.rl), closed_forms::complete_rl_spectrum(n));
    });
    reg.measure("spectrum.complete.rq", kSpectrumTol, g, tag, [&] {
      return positional_difference(eigenvalues_symmetric(b.rq), closed_forms::complete_rq_spectrum(n));
    });
    const EnergyReport rep = energy_report(b, opt.tol);
    reg.measure("energy.complete_formula", opt.tol, g, tag,
                [&] { return std::abs(rep.le_r - 4.0 * (1.0 - 1.0 / static_cast<double>(n))); });
    check_transmission_regular(reg, g, tag, b, rep);
    if (n == 2) {
      reg.measure("energy.k2_bound_equality", kEqualityTol, g, tag, [&] {
        return std::max(std::abs(rep.bounds.slack.lower_2sqrtF), std::abs(rep.bounds.slack.upper_sqrt2nF));
      });
    }
  }
}

void run_cycles(Registry& reg, const Options& opt) {
  for (std::size_t n = 3; n <= opt.max_n; ++n) {
    const Graph g = generate(FamilySpec::cycle(n));
    const std::string tag = FamilySpec::cycle(n).tag();
    const ResistanceBundle b = resistance_bundle(g);
    reg.measure("closed_form.cycle.rl", opt.tol, g, tag, [&] { return max_abs_diff(b.rl, closed_forms::cycle_rl(n)); });
    reg.measure("closed_form.cycle.rq", opt.tol, g, tag, [&] { return max_abs_diff(b.rq, closed_forms::cycle_rq(n)); });
    const auto [rl_closed, rq_closed] = closed_forms::cycle_spectra(n);
    reg.measure("spectrum.cycle.rl", kSpectrumTol, g, tag,
                [&] { return positional_difference(eigenvalues_symmetric(b.rl), rl_closed); });
    reg.measure("spectrum.cycle.rq", kSpectrumTol, g, tag,
                [&] { return positional_difference(eigenvalues_symmetric(b.rq), rq_closed); });
    reg.measure("spectrum.cycle.rl_single_zero", 0.0, g, tag, [&] {
      const auto zeros = std::count_if(rl_closed.values.begin(), rl_closed.values.end(),
                                       [](double v) { return std::abs(v) <= kMultiplicityTol; });
      return zeros == 1 ? 0.0 : 1.0;
    });
    reg.measure("spectrum.circulant_vs_dense", kSpectrumTol, g, tag, [&] {
      const auto row = b.rl.row(0);
      return positional_difference(circulant_eigenvalues({row.begin(), row.end()}), eigenvalues_symmetric(b.rl));
    });
    const EnergyReport rep = energy_report(b, opt.tol);
    check_transmission_regular(reg, g, tag, b, rep);
  }
}

Discrepancy rq_discrepancy(std::size_t p, std::size_t q, const Spectrum& numeric_rq) {
  Discrepancy d;
  d.p = p;
  d.q = q;
  const auto corrected = closed_forms::eigenvalues_2x2(closed_forms::bipartite_rq_quotient(p, q));
  d.corrected_hi = corrected[0];
  d.corrected_lo = corrected[1];
  d.corrected_error = std::max(numeric_rq.distance_to(d.corrected_hi), numeric_rq.distance_to(d.corrected_lo));
  const auto [hi, lo] = closed_forms::published_rq_pair(p, q);
  d.published_hi = hi;
  d.published_lo = lo;
  d.published_error = std::max(numeric_rq.distance_to(hi), numeric_rq.distance_to(lo));
  d.published_matches = d.published_error <= kSpectrumTol;
  return d;
}

void run_bipartite(Registry& reg, const Options& opt, std::vector<Discrepancy>& discrepancies) {
  // p + q <= max_n, plus the full quotient grid p, q <= kQuotientMaxPart.
  const std::size_t limit = std::max(opt.max_n, kQuotientMaxPart + 1);
  for (std::size_t p = 1; p < limit; ++p) {
    for (std::size_t q = 1; q < limit; ++q) {
      if (p + q > opt.max_n && (p > kQuotientMaxPart || q > kQuotientMaxPart)) continue;
      const FamilySpec spec = FamilySpec::bipartite(p, q);
      const Graph g = generate(spec);
      const std::string tag = spec.tag();
      const ResistanceBundle b = resistance_bundle(g);
      reg.measure("closed_form.bipartite.rl", opt.tol, g, tag,
                  [&] { return max_abs_diff(b.rl, closed_forms::bipartite_rl(p, q)); });
      reg.measure("closed_form.bipartite.rq", opt.tol, g, tag,
                  [&] { return max_abs_diff(b.rq, closed_forms::bipartite_rq(p, q)); });
      reg.measure("spectrum.bipartite.rl", kSpectrumTol, g, tag, [&] {
        return positional_difference(eigenvalues_symmetric(b.rl), closed_forms::bipartite_rl_spectrum(p, q));
      });
      const Spectrum rq_numeric = eigenvalues_symmetric(b.rq);
      reg.measure("spectrum.bipartite.rq", kSpectrumTol, g, tag,
                  [&] { return positional_difference(rq_numeric, closed_forms::bipartite_rq_spectrum(p, q)); });
      if (p == q) {
        const EnergyReport rep = energy_report(b, opt.tol);
        check_transmission_regular(reg, g, tag, b, rep);
      }
      if (p > kQuotientMaxPart || q > kQuotientMaxPart) continue;

      Partition parts;
      parts.blocks.resize(2);
      for (std::size_t v = 0; v < p + q; ++v) parts.blocks[v < p ? 0 : 1].push_back(v);
      auto containment = [&](const DenseMatrix& m) {
        const Quotient qm = quotient_matrix(m, parts);
        if (!qm.equitable) return kInf;
        const Spectrum parent = eigenvalues_symmetric(m);
        const auto ev = closed_forms::eigenvalues_2x2(qm.q);
        return std::max(parent.distance_to(ev[0]), parent.distance_to(ev[1]));
      };
      reg.measure("quotient.containment.laplacian", kQuotientTol, g, tag, [&] { return containment(laplacian(g)); });
      reg.measure("quotient.containment.rl", kQuotientTol, g, tag, [&] { return containment(b.rl); });
      reg.measure("quotient.containment.rq", kQuotientTol, g, tag, [&] { return containment(b.rq); });

      const Discrepancy d = rq_discrepancy(p, q, rq_numeric);
      reg.record("bipartite.rq_corrected_quotient", kSpectrumTol, d.corrected_error, 0.0, &g, tag);
      discrepancies.push_back(d);
    }
  }
}

void run_relabel(Registry& reg, const Options& opt) {
  const Graph g = generate(FamilySpec::cycle(4));
  reg.measure("closed_form.bipartite_cycle_relabel", opt.tol, g, "K2,2 vs C4", [] {
    const std::vector<std::size_t> perm{0, 2, 1, 3};
    return std::max(max_abs_diff(permuted(closed_forms::cycle_rl(4), perm), closed_forms::bipartite_rl(2, 2)),
                    max_abs_diff(permuted(closed_forms::cycle_rq(4), perm), closed_forms::bipartite_rq(2, 2)));
  });
}

// ---------------------------------------------------------------------------
// Random corpus, evaluated in parallel and merged in index order.

struct ItemResult {
  std::optional<Graph> graph;
  std::string where;
  std::vector<Sample> samples;
};

template <class Fn>
void push(std::vector<Sample>& out, const char* check, double tol, Fn&& fn) {
  const auto start = Clock::now();
  double v = kInf;
  try {
    v = fn();
  } catch (const std::exception&) {
    v = kInf;
  }
  out.push_back({check, tol, v, elapsed_ms(start)});
}

void corpus_checks(const Graph& g, double tol, std::vector<Sample>& out) {
  const std::size_t n = g.order();
  const DenseMatrix lap = laplacian(g);
  const ResistanceBundle b = resistance_bundle(g);

  push(out, "pinv.penrose_identities", tol, [&] {
    const DenseMatrix p = laplacian_pseudoinverse(lap, n);
    const DenseMatrix lp = kernels::matmul(lap, p);
    const DenseMatrix pl = kernels::matmul(p, lap);
    double v = max_abs_diff(kernels::matmul(lp, lap), lap);
    v = std::max(v, max_abs_diff(kernels::matmul(pl, p), p));
    v = std::max(v, max_abs_diff(lp, lp.transposed()));
    v = std::max(v, max_abs_diff(pl, pl.transposed()));
    for (double s : p.row_sums()) v = std::max(v, std::abs(s));
    return v / std::max(1.0, lap.max_abs());
  });
  push(out, "resistance.le_distance", tol, [&] {
    const DenseMatrix d = classical_distance_matrix(g);
    double v = 0.0;
    for (std::size_t k = 0; k < n * n; ++k) v = std::max(v, b.r.data()[k] - d.data()[k]);
    return v;
  });
  push(out, "resistance.triangle", tol, [&] { return triangle_violation(b.r); });
  push(out, "resistance.symmetric_nonnegative", tol, [&] {
    double v = max_abs_diff(b.r, b.r.transposed());
    for (std::size_t i = 0; i < n; ++i) {
      v = std::max(v, std::abs(b.r(i, i)));
      for (std::size_t j = 0; j < n; ++j) v = std::max(v, -b.r(i, j));
    }
    return v;
  });
  push(out, "rl.row_sums", tol, [&] {
    double v = 0.0;
    for (double s : b.rl.row_sums()) v = std::max(v, std::abs(s));
    return v / std::max(1.0, b.rl.max_abs());
  });
  push(out, "rl.trace", tol, [&] {
    const double total = std::accumulate(b.rtr.begin(), b.rtr.end(), 0.0);
    return std::abs(b.rl.trace() - total) / std::max(1.0, total);
  });

  const EnergyReport rep = energy_report(b, tol);
  const Spectrum& spec = rep.rl_spectrum;
  push(out, "rl.psd", tol, [&] { return -spec.smallest() / std::max(spectral_norm(spec), 1e-300); });
  push(out, "rl.spectral_radius_at_least_2", tol, [&] { return 2.0 - spec.largest(); });
  push(out, "spectrum.sum_equals_trace", kMultiplicityTol,
       [&] { return std::abs(spec.sum() - b.rl.trace()) / static_cast<double>(n); });
  push(out, "spectrum.solver_agreement", tol, [&] {
    const auto jacobi = Spectrum::from_values(kernels::serial::symmetric_eigenvalues(b.rl));
    return positional_difference(jacobi, spec) / std::max(1.0, spectral_norm(spec));
  });
  push(out, "energy.eta_sum_zero", kEtaSumTol, [&] {
    return std::abs(std::accumulate(rep.eta.begin(), rep.eta.end(), 0.0)) / static_cast<double>(n);
  });
  push(out, "energy.eta_square_sum", kEtaSquareTol, [&] {
    double s = 0.0;
    for (double e : rep.eta) s += e * e;
    return std::abs(s - 2.0 * rep.F) / std::max(2.0 * rep.F, 1e-300);
  });
  push(out, "energy.trace_square_identity", tol, [&] {
    double lhs = 0.0;
    for (double gamma : spec.values) lhs += gamma * gamma;
    double rhs = 2.0 * rep.f;
    for (double u : b.rtr) rhs += u * u;
    return std::abs(lhs - rhs) / std::max(1.0, rhs);
  });
  const auto& slack = rep.bounds.slack;
  push(out, "energy.bound.lower_2sqrtF", tol, [&] { return slack.lower_2sqrtF; });
  push(out, "energy.bound.upper_sqrt2nF", tol, [&] { return -slack.upper_sqrt2nF; });
  push(out, "energy.bound.upper_meanU", tol, [&] { return -slack.upper_meanU; });
  push(out, "energy.bound.upper_eta1", tol, [&] { return -slack.upper_eta1; });
  push(out, "energy.eta1_nonnegative", tol, [&] { return -rep.eta.front(); });
}

void edge_addition_checks(const Graph& g, const Graph& added, double tol, std::vector<Sample>& out) {
  const ResistanceBundle before = resistance_bundle(g);
  const ResistanceBundle after = resistance_bundle(added);
  push(out, "monotonicity.resistance", tol, [&] {
    double v = 0.0;
    for (std::size_t k = 0; k < before.r.data().size(); ++k)
      v = std::max(v, after.r.data()[k] - before.r.data()[k]);
    return v;
  });
  push(out, "monotonicity.rl_spectrum", tol, [&] {
    const Spectrum s0 = eigenvalues_symmetric(before.rl);
    const Spectrum s1 = eigenvalues_symmetric(after.rl);
    double v = 0.0;
    for (std::size_t i = 0; i < s0.size(); ++i) v = std::max(v, s1.values[i] - s0.values[i]);
    return v;
  });
}

void tree_checks(const Graph& g, double tol, std::vector<Sample>& out) {
  const ResistanceBundle b = resistance_bundle(g);
  const DenseMatrix d = classical_distance_matrix(g);
  push(out, "tree.resistance_equals_distance", tol, [&] { return max_abs_diff(b.r, d); });
  push(out, "tree.rl_equals_distance_laplacian", tol, [&] {
    const auto dtr = resistance_transmissions(d);
    return max_abs_diff(b.rl, diagonal(dtr) - d);
  });
}

template <class MakeItem>
void run_parallel(Registry& reg, std::size_t count, MakeItem make_item) {
  std::vector<ItemResult> results(count);
  const auto scount = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < scount; ++i) {
    auto& res = results[static_cast<std::size_t>(i)];
    try {
      make_item(static_cast<std::size_t>(i), res);
    } catch (const std::exception& e) {
      res.samples.push_back({"item.exception", 0.0, kInf, 0.0});
      res.where += std::string(" (") + e.what() + ")";
    }
  }
  for (const auto& res : results) {
    const Graph* g = res.graph ? &*res.graph : nullptr;
    for (const auto& s : res.samples) reg.record(s.check, s.tol, s.violation, s.ms, g, res.where);
  }
}

void run_random(Registry& reg, const Options& opt) {
  const std::size_t max_n = std::max<std::size_t>(opt.max_n, 2);

  run_parallel(reg, opt.corpus, [&](std::size_t i, ItemResult& res) {
    std::mt19937_64 rng(mix_seed(opt.seed, i));
    const std::size_t n = uniform_int(rng, 2, max_n);
    const double prob = 0.1 + 0.8 * uniform01(rng);
    res.where = "corpus graph " + std::to_string(i);
    res.graph = random_connected_graph(n, prob, rng());
    corpus_checks(*res.graph, opt.tol, res.samples);
  });

  if (max_n >= 3) {
    run_parallel(reg, opt.edge_pairs, [&](std::size_t i, ItemResult& res) {
      std::mt19937_64 rng(mix_seed(opt.seed ^ 0xED6EULL, i));
      res.where = "edge-addition pair " + std::to_string(i);
      // Complete draws have no non-edge; redraw until one does.
      for (int attempt = 0;; ++attempt) {
        const std::size_t n = uniform_int(rng, 3, max_n);
        const double prob = 0.1 + 0.6 * uniform01(rng);
        Graph g = attempt < 32 ? random_connected_graph(n, prob, rng()) : generate(FamilySpec::path(n));
        const auto candidates = g.non_edges();
        if (candidates.empty()) continue;
        const auto [u, v] = candidates[uniform_int(rng, 0, candidates.size() - 1)];
        res.where += " (+edge " + std::to_string(u) + " " + std::to_string(v) + ")";
        const Graph added = g.with_edge(u, v);
        res.graph = std::move(g);
        edge_addition_checks(*res.graph, added, opt.tol, res.samples);
        break;
      }
    });
  } else {
    reg.skip("monotonicity.resistance", opt.tol, "max_n < 3 leaves no non-edges");
    reg.skip("monotonicity.rl_spectrum", opt.tol, "max_n < 3 leaves no non-edges");
  }

  const std::size_t tree_max = std::min(kTreeMaxOrder, max_n);
  run_parallel(reg, opt.trees, [&](std::size_t i, ItemResult& res) {
    std::mt19937_64 rng(mix_seed(opt.seed ^ 0x74EEULL, i));
    const std::size_t n = uniform_int(rng, 2, tree_max);
    res.where = "tree " + std::to_string(i);
    res.graph = random_tree(n, rng());
    tree_checks(*res.graph, opt.tol, res.samples);
  });
}

std::string inline_graph(std::string edge_list) {
  while (!edge_list.empty() && edge_list.back() == '\n') edge_list.pop_back();
  std::string out;
  for (char c : edge_list) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

bool Report::passed() const noexcept {
  return std::none_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.status == Status::Fail; });
}

std::vector<std::string> Report::failed_checks() const {
  std::vector<std::string> names;
  for (const auto& o : outcomes)
    if (o.status == Status::Fail) names.push_back(o.check);
  return names;
}

Report run(const Options& options) {
  Options opt = options;
  opt.max_n = std::max<std::size_t>(opt.max_n, 2);
  Registry reg;
  Report report;
  if (opt.scope == Scope::Families || opt.scope == Scope::All) {
    run_complete(reg, opt);
    run_cycles(reg, opt);
    run_bipartite(reg, opt, report.discrepancies);
    run_relabel(reg, opt);
  }
  if (opt.scope == Scope::Random || opt.scope == Scope::All) run_random(reg, opt);
  report.outcomes = reg.take();
  return report;
}

nlohmann::json to_json(const Outcome& o) {
  nlohmann::json j{{"type", "check"},
                   {"check", o.check},
                   {"status", to_string(o.status)},
                   {"measured", std::isfinite(o.measured) ? nlohmann::json(o.measured) : nlohmann::json("inf")},
                   {"tolerance", o.tolerance},
                   {"instances", o.instances},
                   {"elapsed_ms", o.elapsed_ms}};
  if (!o.detail.empty()) j["detail"] = o.detail;
  if (o.status == Status::Fail) j["graph"] = o.graph;
  return j;
}

nlohmann::json to_json(const Discrepancy& d) {
  return {{"type", "discrepancy"},
          {"family", FamilySpec::bipartite(d.p, d.q).tag()},
          {"p", d.p},
          {"q", d.q},
          {"corrected_quotient", {d.corrected_hi, d.corrected_lo}},
          {"corrected_error", d.corrected_error},
          {"published_expression", {d.published_hi, d.published_lo}},
          {"published_error", d.published_error},
          {"published_matches", d.published_matches}};
}

std::string to_text(const Outcome& o) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "[%s] %-40s measured=%-12.4g tol=%-8.1g n=%-5zu %.1f ms",
                std::string(to_string(o.status)).c_str(), o.check.c_str(), o.measured, o.tolerance, o.instances,
                o.elapsed_ms);
  std::string line = buf;
  if (!o.detail.empty() && o.status != Status::Pass) line += "  " + o.detail;
  if (o.status == Status::Fail && !o.graph.empty()) line += "  graph: " + inline_graph(o.graph);
  return line;
}

std::string to_text(const Discrepancy& d) {
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "[R^Q %-6s] corrected quotient {%.10g, %.10g} err=%.2g | published expression {%.10g, %.10g} "
                "err=%.3g %s",
                FamilySpec::bipartite(d.p, d.q).tag().c_str(), d.corrected_hi, d.corrected_lo, d.corrected_error,
                d.published_hi, d.published_lo, d.published_error,
                d.published_matches ? "(matches)" : "(MISMATCH, expected)");
  return buf;
}

}  // namespace resq::verify
