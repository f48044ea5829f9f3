#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace scix {

/// Canonical edge identifier: endpoints stored with a < b.
struct EdgeId {
  int a = 0;
  int b = 0;

  EdgeId() = default;
  EdgeId(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {
    if (u == v) throw std::invalid_argument("EdgeId: endpoints coincide");
  }

  friend bool operator==(const EdgeId& x, const EdgeId& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const EdgeId& x, const EdgeId& y) { return !(x == y); }
  friend bool operator<(const EdgeId& x, const EdgeId& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  friend std::ostream& operator<<(std::ostream& os, const EdgeId& e) {
    return os << "(" << e.a << "," << e.b << ")";
  }
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Invariants: no loops, no parallel edges, symmetric adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_order(n))) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
    return d;
  }
  int min_degree() const {
    if (vertex_count() == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < vertex_count(); ++v) d = std::min(d, degree(v));
    return d;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
      throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++edge_count_;
  }

  /// Appends a fresh vertex and returns its id.
  int add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
  }

  /// All edges in canonical sorted order.
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int v = 0; v < vertex_count(); ++v)
      for (int w : neighbors(v))
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  friend bool operator==(const Graph& x, const Graph& y) { return x.adj_ == y.adj_; }
  friend bool operator!=(const Graph& x, const Graph& y) { return !(x == y); }

 private:
  static int check_order(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
  }
  static void insert_sorted(std::vector<int>& list, int v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// Error raised by the text parsers below.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Edge-list format. '#' starts a comment, the first payload line is
// "n <count>" and every following payload line is "e <u> <v>" with u < v.
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Graph> graph;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank or comment-only line
    const std::string where = "edge list, line " + std::to_string(lineno) + ": ";
    if (tag == "n") {
      if (graph) throw ParseError(where + "repeated vertex-count line");
      long long n = -1;
      std::string extra;
      if (!(ls >> n) || (ls >> extra) || n < 0 || n > 100000000)
        throw ParseError(where + "malformed vertex count");
      graph.emplace(static_cast<int>(n));
    } else if (tag == "e") {
      if (!graph) throw ParseError(where + "edge before vertex count");
      long long u = 0, v = 0;
      std::string extra;
      if (!(ls >> u >> v) || (ls >> extra)) throw ParseError(where + "malformed edge line");
      if (u == v) throw ParseError(where + "self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= graph->vertex_count() || v >= graph->vertex_count())
        throw ParseError(where + "vertex id out of declared range");
      if (u > v) throw ParseError(where + "edge endpoints must satisfy u < v");
      if (graph->has_edge(static_cast<int>(u), static_cast<int>(v)))
        throw ParseError(where + "duplicate edge");
      graph->add_edge(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError(where + "unknown line tag '" + tag + "'");
    }
  }
  if (!graph) throw ParseError("edge list: missing \"n <count>\" line");
  return *graph;
}

/// Canonical emission: edges sorted lexicographically.
inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const EdgeId& e : g.edges()) out << "e " << e.a << " " << e.b << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6: offset-63 printable encoding of the upper adjacency triangle in
// column-major order. Graphs on up to 62 vertices; the multi-byte order
// forms are intentionally not supported.
// ---------------------------------------------------------------------------

inline Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126)
      throw ParseError("graph6: invalid character (code " + std::to_string(int(c)) + ")");
  std::size_t pos = 0;
  if (s[0] == 126) throw ParseError("graph6: orders above 62 are not supported");
  const int n = s[pos++] - 63;
  Graph g(n);
  const long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
  if (s.size() - pos < bytes_needed) throw ParseError("graph6: truncated bit vector");
  if (s.size() - pos > bytes_needed) throw ParseError("graph6: trailing characters");
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6: orders above 62 are not supported");
  std::string out(1, static_cast<char>(n + 63));
  int accum = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      accum = (accum << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(accum + 63));
        accum = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((accum << (6 - filled)) + 63));
  return out;
}

}  // namespace scix
