#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scix/graph.hpp"

namespace scix {

/// Length of the shortest cycle; std::nullopt on forests (infinite girth).
inline std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (best != -1 && 2 * dist[static_cast<std::size_t>(x)] >= best) break;
      for (int w : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(w)] = x;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(x)]) {
          // Non-tree edge: the closed walk root..x -- w..root contains a cycle.
          const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

/// Result of deleting all 1-vertices (single pass, not iterated).
/// old_to_new maps surviving original labels to compact new labels, -1 for
/// deleted vertices; new_to_old is its right inverse.
struct ContractResult {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

/// ct(G): delete every vertex whose degree is exactly 1 in the input.
/// One pass by definition — a pendant path of length 2 loses only its tip.
/// (On arbitrary trees this convention, not iterated pruning, applies.)
inline ContractResult contract(const Graph& g) {
  const int n = g.vertex_count();
  ContractResult res;
  res.old_to_new.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 1) {
      res.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(res.new_to_old.size());
      res.new_to_old.push_back(v);
    }
  }
  res.graph = Graph(static_cast<int>(res.new_to_old.size()));
  for (int v = 0; v < n; ++v) {
    const int nv = res.old_to_new[static_cast<std::size_t>(v)];
    if (nv == -1) continue;
    for (int w : g.neighbors(v)) {
      const int nw = res.old_to_new[static_cast<std::size_t>(w)];
      if (nw != -1 && nv < nw) res.graph.add_edge(nv, nw);
    }
  }
  return res;
}

/// ex_d(G): add d - d(v) pendant leaves at every vertex with d(v) in 2..d.
/// Vertices of degree 0 or 1 are left alone; their ids are reported through
/// `skipped` when the caller provides it. Throws if the maximum degree
/// already exceeds d.
inline Graph expand(const Graph& g, int d, std::vector<int>* skipped = nullptr) {
  if (d < 3) throw std::invalid_argument("expand: d must be at least 3");
  if (g.max_degree() > d) throw std::invalid_argument("expand: maximum degree exceeds d");
  Graph out = g;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int dv = g.degree(v);
    if (dv < 2) {
      if (skipped) skipped->push_back(v);
      continue;
    }
    for (int i = dv; i < d; ++i) out.add_edge(v, out.add_vertex());
  }
  return out;
}

/// Conflict graph: vertex i is edge i of g (in canonical sorted order); two
/// vertices are adjacent iff the edges share an endpoint or some edge of g
/// touches both. Proper vertex colorings of the result are exactly the
/// strong edge-colorings of g.
inline Graph conflict_graph(const Graph& g) {
  const std::vector<EdgeId> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Graph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const EdgeId& e = edges[static_cast<std::size_t>(i)];
      const EdgeId& f = edges[static_cast<std::size_t>(j)];
      const bool share = e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b;
      const bool bridge = g.has_edge(e.a, f.a) || g.has_edge(e.a, f.b) ||
                          g.has_edge(e.b, f.a) || g.has_edge(e.b, f.b);
      if (share || bridge) out.add_edge(i, j);
    }
  }
  return out;
}

/// Maximal runs of degree-2 vertices with at least min_len vertices, each
/// reported as the ordered vertex path. A connected component that is a
/// bare cycle comes back as one run covering the whole cycle (first and
/// last vertices adjacent).
inline std::vector<std::vector<int>> find_threads(const Graph& g, int min_len) {
  if (min_len < 1) throw std::invalid_argument("find_threads: min_len must be positive");
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  auto walk = [&](int start, int prev) {
    // Follow degree-2 vertices from start, away from prev.
    std::vector<int> path;
    int cur = start;
    while (g.degree(cur) == 2 && !seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      path.push_back(cur);
      const auto& nb = g.neighbors(cur);
      const int next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    return path;
  };
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2 || seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = 1;
    std::vector<int> path{v};
    const auto& nb = g.neighbors(v);
    std::vector<int> left = walk(nb[0], v);
    std::vector<int> right = walk(nb[1], v);
    std::reverse(left.begin(), left.end());
    left.push_back(v);
    left.insert(left.end(), right.begin(), right.end());
    if (static_cast<int>(left.size()) >= min_len) out.push_back(std::move(left));
  }
  return out;
}

namespace detail {

struct BridgeState {
  const Graph* g;
  std::vector<int> tin, low;
  std::vector<EdgeId> bridges;
  std::vector<char> articulation;
  int timer = 0;

  void dfs(int v, int parent_edge_to) {
    tin[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    int children = 0;
    for (int w : g->neighbors(v)) {
      if (w == parent_edge_to) continue;
      if (tin[static_cast<std::size_t>(w)] != -1) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], tin[static_cast<std::size_t>(w)]);
      } else {
        dfs(w, v);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] > tin[static_cast<std::size_t>(v)])
          bridges.emplace_back(v, w);
        if (parent_edge_to != -1 && low[static_cast<std::size_t>(w)] >= tin[static_cast<std::size_t>(v)])
          articulation[static_cast<std::size_t>(v)] = 1;
        ++children;
      }
    }
    if (parent_edge_to == -1 && children > 1) articulation[static_cast<std::size_t>(v)] = 1;
  }
};

inline BridgeState bridge_dfs(const Graph& g) {
  BridgeState st;
  st.g = &g;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  st.tin.assign(n, -1);
  st.low.assign(n, -1);
  st.articulation.assign(n, 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (st.tin[static_cast<std::size_t>(v)] == -1) st.dfs(v, -1);
  return st;
}

}  // namespace detail

/// All cut-edges (bridges), in canonical sorted order.
inline std::vector<EdgeId> cut_edges(const Graph& g) {
  auto st = detail::bridge_dfs(g);
  std::sort(st.bridges.begin(), st.bridges.end());
  return st.bridges;
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        queue.push_back(w);
      }
  }
  return count == n;
}

/// 2-connected in the vertex sense: connected, at least 3 vertices, and no
/// articulation point.
inline bool is_two_connected(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  const auto st = detail::bridge_dfs(g);
  return std::none_of(st.articulation.begin(), st.articulation.end(), [](char c) { return c != 0; });
}

}  // namespace scix
