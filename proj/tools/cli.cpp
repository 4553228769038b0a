#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "resq/energy.hpp"
#include "resq/error.hpp"
#include "resq/graph.hpp"
#include "resq/io.hpp"
#include "resq/resistance.hpp"
#include "resq/spectral.hpp"
#include "resq/verify.hpp"

namespace resq::cli {
namespace {

// RESQ_TOL overrides the default comparison tolerance.
double comparison_tol() {
  const char* env = std::getenv("RESQ_TOL");
  if (env == nullptr || *env == '\0') return 1e-9;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) {
    throw Error(ErrorKind::MalformedLine, std::string("RESQ_TOL is not a positive number: ") + env);
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorKind::IoError, "short write to " + path);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Disconnected: return kDomainError;
    default: return kInputError;
  }
}

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  FamilySpec spec{FamilyKind::Complete};
  if (a.family == "complete") {
    spec = FamilySpec::complete(a.n);
  } else if (a.family == "bipartite") {
    spec = FamilySpec::bipartite(a.p, a.q);
  } else if (a.family == "cycle") {
    spec = FamilySpec::cycle(a.n);
  } else {
    spec = FamilySpec::path(a.n);
  }
  const Graph g = generate(spec);
  const std::string text = "# " + spec.tag() + "\n" + format_edge_list(g);
  write_output(a.out_path, text, out);
  (a.out_path.empty() ? err : out) << spec.tag() << ": " << g.order() << " vertices, " << g.size() << " edges\n";
  return kSuccess;
}

struct ComputeArgs {
  std::string graph_path;
  std::string what = "energy";
  std::string format = "json";
  std::string out_path;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(a.graph_path));
  const bool json = a.format == "json";
  std::string text;
  auto emit_json = [&text](const io::json& j) { text = j.dump(2) + "\n"; };

  if (a.what == "spectrum-rl" || a.what == "spectrum-rq") {
    const ResistanceBundle b = resistance_bundle(g);
    const Spectrum s = eigenvalues_symmetric(a.what == "spectrum-rl" ? b.rl : b.rq);
    if (json) {
      emit_json(io::spectrum_to_json(s));
    } else {
      text = io::spectrum_to_csv(s);
    }
  } else if (a.what == "energy") {
    const EnergyReport rep = resistance_laplacian_energy(g, comparison_tol());
    if (json) {
      emit_json(io::energy_to_json(rep));
    } else {
      text = io::energy_to_csv(rep);
    }
  } else {
    const ResistanceBundle b = resistance_bundle(g);
    const DenseMatrix& m = a.what == "resistance" ? b.r : a.what == "rl" ? b.rl : b.rq;
    if (json) {
      emit_json(io::matrix_to_json(m, a.what));
    } else {
      text = io::matrix_to_csv(m);
    }
  }
  write_output(a.out_path, text, out);
  return kSuccess;
}

struct VerifyArgs {
  std::string scope = "all";
  std::uint64_t seed = 1;
  std::size_t max_n = 12;
  std::size_t corpus = 500;
  std::size_t edge_pairs = 200;
  std::size_t trees = 100;
  int threads = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  verify::Options opt;
  static const std::map<std::string, verify::Scope> scopes{
      {"families", verify::Scope::Families}, {"random", verify::Scope::Random}, {"all", verify::Scope::All}};
  opt.scope = scopes.at(a.scope);
  opt.seed = a.seed;
  opt.max_n = a.max_n;
  opt.corpus = a.corpus;
  opt.edge_pairs = a.edge_pairs;
  opt.trees = a.trees;
  opt.tol = comparison_tol();
#ifdef _OPENMP
  if (a.threads > 0) omp_set_num_threads(a.threads);
#endif
  const verify::Report report = verify::run(opt);

  std::size_t failed = 0;
  for (const auto& o : report.outcomes) {
    if (o.status == verify::Status::Fail) ++failed;
    out << (a.json ? verify::to_json(o).dump() : verify::to_text(o)) << '\n';
  }
  if (!report.discrepancies.empty() && !a.json) {
    out << "\nR^Q(K_p,q) two-eigenvalue pair: corrected quotient vs published expression\n";
  }
  for (const auto& d : report.discrepancies) {
    out << (a.json ? verify::to_json(d).dump() : verify::to_text(d)) << '\n';
  }
  const bool ok = report.passed();
  if (a.json) {
    out << nlohmann::json{{"type", "summary"},
                          {"checks", report.outcomes.size()},
                          {"failed", failed},
                          {"failed_checks", report.failed_checks()},
                          {"passed", ok}}
               .dump()
        << '\n';
  } else {
    out << "\n" << report.outcomes.size() - failed << "/" << report.outcomes.size() << " checks passed";
    if (!ok) {
      out << "; failing:";
      for (const auto& name : report.failed_checks()) out << ' ' << name;
    }
    out << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resistance Laplacian spectra, energy and verification"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write the edge list of a graph family instance");
  generate_cmd->add_option("--family", gen.family, "complete | bipartite | cycle | path")
      ->required()
      ->check(CLI::IsMember({"complete", "bipartite", "cycle", "path"}));
  generate_cmd->add_option("--n", gen.n, "vertex count (complete, cycle, path)");
  generate_cmd->add_option("--p", gen.p, "first part size (bipartite)");
  generate_cmd->add_option("--q", gen.q, "second part size (bipartite)");
  generate_cmd->add_option("--out", gen.out_path, "output file (default stdout)");

  ComputeArgs comp;
  auto* compute_cmd = app.add_subcommand("compute", "Compute a matrix, spectrum or energy report for an edge list");
  compute_cmd->add_option("graph", comp.graph_path, "edge-list file")->required();
  compute_cmd->add_option("--what", comp.what, "resistance | rl | rq | spectrum-rl | spectrum-rq | energy")
      ->check(CLI::IsMember({"resistance", "rl", "rq", "spectrum-rl", "spectrum-rq", "energy"}));
  compute_cmd->add_option("--format", comp.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  compute_cmd->add_option("--out", comp.out_path, "output file (default stdout)");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity, bound and closed-form checks");
  verify_cmd->add_option("--scope", ver.scope, "families | random | all")
      ->check(CLI::IsMember({"families", "random", "all"}));
  verify_cmd->add_option("--seed", ver.seed, "seed for the random corpus");
  verify_cmd->add_option("--max-n", ver.max_n, "largest graph order");
  verify_cmd->add_option("--corpus", ver.corpus, "random connected graphs in the corpus");
  verify_cmd->add_option("--edge-pairs", ver.edge_pairs, "(graph, non-edge) pairs for monotonicity");
  verify_cmd->add_option("--trees", ver.trees, "random trees for the tree checks");
  verify_cmd->add_option("--threads", ver.threads, "worker threads (default: OpenMP default)");
  verify_cmd->add_flag("--json", ver.json, "JSON lines instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int rc = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc == 0 ? kSuccess : kInputError;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen, out, err);
    if (*compute_cmd) return cmd_compute(comp, out);
    return cmd_verify(ver, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace resq::cli
