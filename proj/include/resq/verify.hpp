#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace resq::verify {

enum class Scope { Families, Random, All };
enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status s) noexcept;

struct Options {
  Scope scope = Scope::All;
  std::uint64_t seed = 1;
  std::size_t max_n = 12;
  /// Random connected graphs in the property corpus.
  std::size_t corpus = 500;
  /// (graph, non-edge) pairs for the edge-addition checks.
  std::size_t edge_pairs = 200;
  std::size_t trees = 100;
  /// Base comparison tolerance; the stricter and looser per-check
  /// tolerances (1e-8 spectra, 1e-7 quotient containment) are fixed.
  double tol = 1e-9;
};

/// One named check aggregated over every instance it ran on. `measured` is
/// the worst violation seen (0 when every instance holds exactly) and the
/// check passes when measured <= tolerance.
struct Outcome {
  std::string check;
  Status status = Status::Skip;
  double measured = 0.0;
  double tolerance = 0.0;
  std::size_t instances = 0;
  double elapsed_ms = 0.0;
  std::string detail;
  /// Edge list of the first violating graph; empty unless status is Fail.
  std::string graph;
};

/// R^Q(K_{p,q}): corrected quotient eigenvalues against the numeric spectrum,
/// next to the published radical expression.
struct Discrepancy {
  std::size_t p = 0;
  std::size_t q = 0;
  double corrected_hi = 0.0;
  double corrected_lo = 0.0;
  /// max distance from a corrected eigenvalue to the numeric spectrum
  double corrected_error = 0.0;
  double published_hi = 0.0;
  double published_lo = 0.0;
  double published_error = 0.0;
  bool published_matches = false;
};

struct Report {
  std::vector<Outcome> outcomes;
  std::vector<Discrepancy> discrepancies;

  bool passed() const noexcept;
  std::vector<std::string> failed_checks() const;
};

Report run(const Options& options);

nlohmann::json to_json(const Outcome& o);
nlohmann::json to_json(const Discrepancy& d);
/// Human-readable one-liners.
std::string to_text(const Outcome& o);
std::string to_text(const Discrepancy& d);

}  // namespace resq::verify
