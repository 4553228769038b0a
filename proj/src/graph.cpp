#include "resq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "resq/error.hpp"

namespace resq {
namespace {

constexpr int kMaxConnectedDraws = 64;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool parse_index(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// 53 random mantissa bits, portable across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(bound));
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " with n = " + std::to_string(n));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorKind::DuplicateEdge,
                "edge " + std::to_string(dup->first) + " " + std::to_string(dup->second) + " listed twice");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto edges = edges_;
  edges.emplace_back(u, v);
  return Graph(n_, std::move(edges));
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::string Graph::edge_hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&h](std::uint64_t x) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (x >> (8 * byte)) & 0xFFu;
      h *= 1099511628211ULL;
    }
  };
  feed(n_);
  for (const auto& [u, v] : edges_) {
    feed(u);
    feed(v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::Complete:
    case FamilyKind::Path:
      if (a < 1) throw Error(ErrorKind::InvalidFamilyParams, tag() + ": n must be at least 1");
      break;
    case FamilyKind::Cycle:
      if (a < 3) throw Error(ErrorKind::InvalidFamilyParams, "cycle needs n >= 3, got " + std::to_string(a));
      break;
    case FamilyKind::CompleteBipartite:
      if (a < 1 || b < 1) {
        throw Error(ErrorKind::InvalidFamilyParams,
                    "complete bipartite needs p, q >= 1, got " + std::to_string(a) + "," + std::to_string(b));
      }
      break;
  }
}

std::string FamilySpec::tag() const {
  switch (kind) {
    case FamilyKind::Complete: return "K" + std::to_string(a);
    case FamilyKind::CompleteBipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
    case FamilyKind::Cycle: return "C" + std::to_string(a);
    case FamilyKind::Path: return "P" + std::to_string(a);
  }
  return "?";
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto fail = [&line_no](ErrorKind kind, const std::string& what) -> Error {
    return Error(kind, "line " + std::to_string(line_no) + ": " + what);
  };
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (!n) {
      std::size_t count = 0;
      if (tokens.size() != 1 || !parse_index(tokens[0], count) || count == 0) {
        throw fail(ErrorKind::MalformedLine, "expected a positive vertex count, got \"" + line + "\"");
      }
      n = count;
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (tokens.size() != 2 || !parse_index(tokens[0], u) || !parse_index(tokens[1], v)) {
      throw fail(ErrorKind::MalformedLine, "expected \"u v\", got \"" + line + "\"");
    }
    if (u == v) throw fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u >= *n || v >= *n) {
      throw fail(ErrorKind::VertexOutOfRange, "vertex out of range [0, " + std::to_string(*n) + ")");
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
    edge_lines.push_back(line_no);
  }
  if (!n) throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": missing vertex count");

  std::set<Edge> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!seen.insert(edges[k]).second) {
      line_no = edge_lines[k];
      throw fail(ErrorKind::DuplicateEdge,
                 "edge " + std::to_string(edges[k].first) + " " + std::to_string(edges[k].second) + " repeated");
    }
  }
  return Graph(*n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  const std::size_t n = spec.order();
  switch (spec.kind) {
    case FamilyKind::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::CompleteBipartite:
      for (Vertex u = 0; u < spec.a; ++u)
        for (Vertex v = spec.a; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::Cycle:
      for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case FamilyKind::Path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
  }
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      ++reached;
      queue.push_back(v);
    }
  }
  return reached == n;
}

DenseMatrix adjacency(const Graph& g) {
  DenseMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

DenseMatrix laplacian(const Graph& g) {
  DenseMatrix l(g.order());
  for (const auto& [u, v] : g.edges()) {
    l(u, v) = -1.0;
    l(v, u) = -1.0;
    l(u, u) += 1.0;
    l(v, v) += 1.0;
  }
  return l;
}

DenseMatrix classical_distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  DenseMatrix d(n);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] != kUnseen) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
    for (Vertex t = 0; t < n; ++t) {
      if (dist[t] == kUnseen) {
        throw Error(ErrorKind::Disconnected,
                    "no path between " + std::to_string(s) + " and " + std::to_string(t));
      }
      d(s, t) = static_cast<double>(dist[t]);
    }
  }
  return d;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph random_connected_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidFamilyParams, "random graph needs n >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorKind::InvalidFamilyParams, "edge probability outside [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int draw = 0; draw < kMaxConnectedDraws; ++draw) {
    edges.clear();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (uniform01(rng) < edge_prob) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  // Overlay a random spanning tree on the last draw.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> merged(edges.begin(), edges.end());
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex u = order[i];
    const Vertex v = order[uniform_below(rng, i)];
    merged.emplace(std::min(u, v), std::max(u, v));
  }
  return Graph(n, {merged.begin(), merged.end()});
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidFamilyParams, "random tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(label[i], label[uniform_below(rng, i)]);
  return Graph(n, std::move(edges));
}

}  // namespace resq
