#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "scix/graph.hpp"
#include "scix/rational.hpp"

namespace scix {
namespace detail {

/// Dinic max-flow on a small integer-capacity network.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(int src, int sink) {
    std::int64_t total = 0;
    while (build_levels(src, sink)) {
      iter_ = head_;
      std::int64_t pushed;
      while ((pushed = augment(src, sink, std::numeric_limits<std::int64_t>::max())) > 0)
        total += pushed;
    }
    return total;
  }

  /// After run(): nodes still reachable from src in the residual network
  /// (the source side of a minimum cut).
  std::vector<char> source_side(int src) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{src};
    seen[static_cast<std::size_t>(src)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int a = head_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool build_levels(int src, int sink) {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{src};
    level_[static_cast<std::size_t>(src)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      for (int a = head_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] == -1) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] != -1;
  }

  std::int64_t augment(int v, int sink, std::int64_t limit) {
    if (v == sink) return limit;
    for (int& a = iter_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1)
        continue;
      const std::int64_t pushed = augment(arc.to, sink, std::min(limit, arc.cap));
      if (pushed > 0) {
        arc.cap -= pushed;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
  std::vector<Arc> arcs_;
};

/// True iff some nonempty vertex set S satisfies e(S)/|S| > a/b, and if so
/// fills `witness` with one such S (taken from the min-cut source side).
inline bool denser_subgraph_exists(const Graph& g, std::int64_t a, std::int64_t b,
                                   std::vector<int>* witness) {
  const int n = g.vertex_count();
  const std::vector<EdgeId> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  // Nodes: 0 = source, 1..m = edge nodes, m+1..m+n = vertex nodes, m+n+1 = sink.
  const int src = 0, sink = m + n + 1;
  MaxFlow flow(m + n + 2);
  const std::int64_t inf = std::int64_t{1} << 60;
  for (int i = 0; i < m; ++i) {
    flow.add_arc(src, 1 + i, b);
    flow.add_arc(1 + i, m + 1 + edges[static_cast<std::size_t>(i)].a, inf);
    flow.add_arc(1 + i, m + 1 + edges[static_cast<std::size_t>(i)].b, inf);
  }
  for (int v = 0; v < n; ++v) flow.add_arc(m + 1 + v, sink, a);
  const std::int64_t value = flow.run(src, sink);
  // min cut = b*m - max_S (b*e(S) - a*|S|), so a shortfall certifies S.
  if (value >= b * static_cast<std::int64_t>(m)) return false;
  if (witness) {
    witness->clear();
    const std::vector<char> side = flow.source_side(src);
    for (int v = 0; v < n; ++v)
      if (side[static_cast<std::size_t>(m + 1 + v)]) witness->push_back(v);
  }
  return true;
}

inline Rational density_of(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  std::int64_t e = 0;
  for (int v : s)
    for (int w : g.neighbors(v))
      if (v < w && in[static_cast<std::size_t>(w)]) ++e;
  return Rational(e, static_cast<std::int64_t>(s.size()));
}

}  // namespace detail

/// Exact maximum average degree: max over nonempty S of 2 e(G[S]) / |S|.
/// Parametric max-flow iteration — each round asks the min cut whether a
/// subgraph strictly denser than the current candidate exists and, if so,
/// reads the denser set off the cut. Densities live in a finite set, so
/// this terminates with the exact rational. Edgeless graphs return 0.
inline Rational mad_exact(const Graph& g) {
  if (g.edge_count() == 0) return Rational(0);
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  Rational best = detail::density_of(g, all);
  std::vector<int> witness;
  while (detail::denser_subgraph_exists(g, best.num(), best.den(), &witness)) {
    if (witness.empty()) throw std::logic_error("mad_exact: cut yielded empty improving set");
    const Rational improved = detail::density_of(g, witness);
    if (!(best < improved)) throw std::logic_error("mad_exact: non-improving iteration");
    best = improved;
  }
  return Rational(2) * best;
}

/// Independent oracle: exhaustive maximum over all nonempty vertex subsets.
/// Subset edge counts are built by DP over the lattice, so this is O(2^n)
/// time and memory; refuses graphs with more than 24 vertices.
inline Rational mad_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("mad_bruteforce: graph too large for exhaustion");
  if (g.edge_count() == 0) return Rational(0);
  std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj_mask[static_cast<std::size_t>(v)] |= (1u << w);
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint16_t> edge_count(total, 0);
  std::int64_t best_e = 0, best_s = 1;
  for (std::size_t s = 1; s < total; ++s) {
    const int v = __builtin_ctzll(s);
    const std::size_t rest = s & (s - 1);
    const std::uint16_t e =
        static_cast<std::uint16_t>(edge_count[rest] +
                                   __builtin_popcount(adj_mask[static_cast<std::size_t>(v)] &
                                                      static_cast<std::uint32_t>(rest)));
    edge_count[s] = e;
    const int size = __builtin_popcountll(s);
    // compare e/size > best_e/best_s by cross multiplication
    if (static_cast<std::int64_t>(e) * best_s > best_e * size) {
      best_e = e;
      best_s = size;
    }
  }
  return Rational(2 * best_e, best_s);
}

}  // namespace scix
