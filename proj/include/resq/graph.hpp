#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resq/matrix.hpp"

namespace resq {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (first < second) and sorted, so two graphs with the same edge set compare
/// equal regardless of how they were built.
class Graph {
 public:
  /// Throws SelfLoop, VertexOutOfRange or DuplicateEdge.
  Graph(std::size_t n, std::vector<Edge> edges);
  explicit Graph(std::size_t n) : Graph(n, {}) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Copy with one more edge; throws DuplicateEdge if present.
  Graph with_edge(Vertex u, Vertex v) const;
  /// Unordered pairs {u,v}, u < v, that are not edges.
  std::vector<Edge> non_edges() const;

  /// 64-bit FNV-1a over the canonical edge list, rendered as 16 hex digits.
  std::string edge_hash() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

enum class FamilyKind { Complete, CompleteBipartite, Cycle, Path };

/// Tagged description of a graph family instance. `a` is n (or p), `b` is q
/// for CompleteBipartite and unused otherwise.
struct FamilySpec {
  FamilyKind kind;
  std::size_t a = 0;
  std::size_t b = 0;

  static FamilySpec complete(std::size_t n) { return {FamilyKind::Complete, n, 0}; }
  static FamilySpec bipartite(std::size_t p, std::size_t q) { return {FamilyKind::CompleteBipartite, p, q}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::Cycle, n, 0}; }
  static FamilySpec path(std::size_t n) { return {FamilyKind::Path, n, 0}; }

  std::size_t order() const noexcept { return kind == FamilyKind::CompleteBipartite ? a + b : a; }
  /// Throws InvalidFamilyParams.
  void validate() const;
  /// "K4", "K2,3", "C5", "P3".
  std::string tag() const;

  bool operator==(const FamilySpec&) const = default;
};

/// Parses the edge-list text format: the first non-comment line holds the
/// vertex count, each following line "u v". '#' starts a comment line,
/// blank lines are skipped, CRLF is accepted.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph generate(const FamilySpec& spec);

bool is_connected(const Graph& g);

/// L = Diag(deg) - A.
DenseMatrix laplacian(const Graph& g);
DenseMatrix adjacency(const Graph& g);

/// BFS hop distances; throws Disconnected.
DenseMatrix classical_distance_matrix(const Graph& g);

/// Erdos-Renyi G(n, edge_prob) redrawn until connected; after a fixed
/// number of failed draws a random spanning tree is overlaid on the last
/// draw. Deterministic for a fixed seed.
Graph random_connected_graph(std::size_t n, double edge_prob, std::uint64_t seed);

/// Uniform random recursive tree: vertex i > 0 attaches to a uniformly
/// chosen earlier vertex, then labels are shuffled.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// splitmix64 step, used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace resq
