#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "scix/graph.hpp"
#include "scix/structure.hpp"

namespace scix {

/// Edge -> color (1-based). Total on E(G) when returned as a full coloring.
using Coloring = std::map<EdgeId, int>;
/// Edge -> color on a subset of E(G); conflict-free on its domain.
using PartialColoring = std::map<EdgeId, int>;
/// Edge -> set of allowed colors; must cover every edge when used.
using ListAssignment = std::map<EdgeId, std::vector<int>>;

/// True iff c is total on E(g) and edges at distance at most two receive
/// distinct colors. Throws if c is not total.
inline bool verify_coloring(const Graph& g, const Coloring& c) {
  const std::vector<EdgeId> edges = g.edges();
  for (const EdgeId& e : edges)
    if (c.find(e) == c.end())
      throw std::invalid_argument("verify_coloring: coloring is not total on E(G)");
  const Graph conf = conflict_graph(g);
  for (int i = 0; i < conf.vertex_count(); ++i)
    for (int j : conf.neighbors(i))
      if (i < j && c.at(edges[static_cast<std::size_t>(i)]) == c.at(edges[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

/// Backtracking engine over the conflict graph of a fixed host graph.
/// Reusable across many solve calls (the reducibility checker issues
/// thousands per configuration); colors are bits 0..k-1 of a mask.
///
/// Branching order is most-constrained-edge-first (fewest remaining
/// colors), ties broken by larger conflict degree, then lower edge index,
/// which makes runs deterministic. With uniform lists and nothing fixed,
/// color classes are introduced in order: a branch may use at most one
/// color index beyond the largest used so far.
class StrongColorer {
 public:
  static constexpr int kMaxColors = 30;

  explicit StrongColorer(const Graph& g) : edges_(g.edges()) {
    const Graph conf = conflict_graph(g);
    const int m = conf.vertex_count();
    conflicts_.resize(static_cast<std::size_t>(m));
    conflict_degree_.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      conflicts_[static_cast<std::size_t>(i)] = conf.neighbors(i);
      conflict_degree_[static_cast<std::size_t>(i)] = conf.degree(i);
    }
    color_.resize(static_cast<std::size_t>(m));
    domain_.resize(static_cast<std::size_t>(m));
  }

  int edge_total() const { return static_cast<int>(edges_.size()); }
  const std::vector<EdgeId>& edges() const { return edges_; }

  int edge_index(const EdgeId& e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
      throw std::invalid_argument("StrongColorer: not an edge of the host graph");
    return static_cast<int>(it - edges_.begin());
  }

  /// Complete search for an assignment with color_[i] a bit of masks[i].
  /// `fixed` entries are (edge index, color bit index) applied up front;
  /// returns std::nullopt when no assignment exists. `symmetry` must only
  /// be set when all masks are equal and nothing is fixed.
  std::optional<std::vector<int>> solve(const std::vector<std::uint32_t>& masks, int k, bool symmetry,
                                        const std::vector<std::pair<int, int>>& fixed) {
    const int m = edge_total();
    if (k < 0 || k > kMaxColors) throw std::invalid_argument("StrongColorer: color count out of range");
    domain_ = masks;
    std::fill(color_.begin(), color_.end(), -1);
    trail_.clear();
    max_used_ = -1;
    symmetry_ = symmetry;
    k_ = k;
    unassigned_ = m;
    for (const auto& [idx, bit] : fixed) {
      if (color_[static_cast<std::size_t>(idx)] != -1)
        throw std::invalid_argument("StrongColorer: edge fixed twice");
      if (((domain_[static_cast<std::size_t>(idx)] >> bit) & 1u) == 0) return std::nullopt;
      if (!assign(idx, bit)) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    std::vector<int> out(color_.begin(), color_.end());
    return out;
  }

 private:
  bool assign(int e, int bit) {
    color_[static_cast<std::size_t>(e)] = bit;
    --unassigned_;
    trail_.push_back({e, -1, 0});  // marker: assignment of e
    bool ok = true;
    for (int f : conflicts_[static_cast<std::size_t>(e)]) {
      if (color_[static_cast<std::size_t>(f)] != -1) continue;
      std::uint32_t& dom = domain_[static_cast<std::size_t>(f)];
      if ((dom >> bit) & 1u) {
        dom &= ~(std::uint32_t{1} << bit);
        trail_.push_back({e, f, bit});
        if (dom == 0) ok = false;  // keep pruning recorded; caller undoes
      }
    }
    return ok;
  }

  void undo_to(std::size_t mark, int e) {
    while (trail_.size() > mark) {
      const TrailOp op = trail_.back();
      trail_.pop_back();
      if (op.pruned_edge == -1) break;  // assignment marker
      domain_[static_cast<std::size_t>(op.pruned_edge)] |= (std::uint32_t{1} << op.bit);
    }
    color_[static_cast<std::size_t>(e)] = -1;
    ++unassigned_;
  }

  int pick() const {
    int best = -1, best_pop = kMaxColors + 2;
    for (int e = 0; e < edge_total(); ++e) {
      if (color_[static_cast<std::size_t>(e)] != -1) continue;
      const int pop = __builtin_popcount(domain_[static_cast<std::size_t>(e)]);
      if (pop < best_pop ||
          (pop == best_pop && conflict_degree_[static_cast<std::size_t>(e)] >
                                  conflict_degree_[static_cast<std::size_t>(best)])) {
        best = e;
        best_pop = pop;
      }
    }
    return best;
  }

  bool search() {
    if (unassigned_ == 0) return true;
    const int e = pick();
    std::uint32_t avail = domain_[static_cast<std::size_t>(e)];
    if (symmetry_ && max_used_ + 2 < k_)
      avail &= (std::uint32_t{1} << (max_used_ + 2)) - 1;
    while (avail) {
      const int bit = __builtin_ctz(avail);
      avail &= avail - 1;
      const std::size_t mark = trail_.size();
      const int prev_max = max_used_;
      max_used_ = std::max(max_used_, bit);
      if (assign(e, bit) && search()) return true;
      undo_to(mark, e);
      max_used_ = prev_max;
    }
    return false;
  }

  struct TrailOp {
    int assigned_edge;
    int pruned_edge;  // -1 marks the assignment itself
    int bit;
  };

  std::vector<EdgeId> edges_;
  std::vector<std::vector<int>> conflicts_;
  std::vector<int> conflict_degree_;
  std::vector<int> color_;
  std::vector<std::uint32_t> domain_;
  std::vector<TrailOp> trail_;
  std::size_t unassigned_ = 0;
  int max_used_ = -1;
  bool symmetry_ = false;
  int k_ = 0;
};

namespace detail {

inline std::vector<std::pair<int, int>> fixed_to_indices(const StrongColorer& engine,
                                                         const PartialColoring& fixed, int k) {
  std::vector<std::pair<int, int>> out;
  out.reserve(fixed.size());
  for (const auto& [e, c] : fixed) {
    if (c < 1 || c > k)
      throw std::invalid_argument("fixed coloring uses a color outside 1..k");
    out.emplace_back(engine.edge_index(e), c - 1);
  }
  return out;
}

inline Coloring indices_to_coloring(const StrongColorer& engine, const std::vector<int>& bits,
                                    const std::vector<int>* palette = nullptr) {
  Coloring out;
  for (int i = 0; i < engine.edge_total(); ++i) {
    const int bit = bits[static_cast<std::size_t>(i)];
    out[engine.edges()[static_cast<std::size_t>(i)]] =
        palette ? (*palette)[static_cast<std::size_t>(bit)] : bit + 1;
  }
  return out;
}

}  // namespace detail

/// Complete search for a strong k-edge-coloring extending `fixed`.
/// Throws if `fixed` already conflicts with itself.
inline std::optional<Coloring> decide_strong(const Graph& g, int k, const PartialColoring& fixed = {}) {
  if (k < 0) throw std::invalid_argument("decide_strong: negative color count");
  StrongColorer engine(g);
  // reject conflicting fixed colorings up front, as an input error
  {
    const Graph conf = conflict_graph(g);
    const auto& edges = engine.edges();
    for (int i = 0; i < conf.vertex_count(); ++i) {
      const auto ei = fixed.find(edges[static_cast<std::size_t>(i)]);
      if (ei == fixed.end()) continue;
      for (int j : conf.neighbors(i)) {
        if (j <= i) continue;
        const auto ej = fixed.find(edges[static_cast<std::size_t>(j)]);
        if (ej != fixed.end() && ei->second == ej->second)
          throw std::invalid_argument("decide_strong: fixed coloring already conflicting");
      }
    }
  }
  if (k == 0) {
    if (g.edge_count() == 0) return Coloring{};
    return std::nullopt;
  }
  if (k > StrongColorer::kMaxColors) throw std::invalid_argument("decide_strong: more than 30 colors");
  const std::vector<std::uint32_t> masks(static_cast<std::size_t>(engine.edge_total()),
                                         (k >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1));
  const auto fixed_idx = detail::fixed_to_indices(engine, fixed, k);
  const auto result = engine.solve(masks, k, fixed.empty(), fixed_idx);
  if (!result) return std::nullopt;
  return detail::indices_to_coloring(engine, *result);
}

/// Complete search for a strong coloring drawn from per-edge lists.
/// Color-class symmetry breaking turns on only when every list is the
/// same set. Throws on a missing list.
inline std::optional<Coloring> decide_list(const Graph& g, const ListAssignment& lists) {
  StrongColorer engine(g);
  std::set<int> palette_set;
  for (const auto& e : engine.edges()) {
    const auto it = lists.find(e);
    if (it == lists.end())
      throw std::invalid_argument("decide_list: missing list for an edge");
    for (int c : it->second) {
      if (c < 1) throw std::invalid_argument("decide_list: colors must be positive");
      palette_set.insert(c);
    }
  }
  const std::vector<int> palette(palette_set.begin(), palette_set.end());
  if (static_cast<int>(palette.size()) > StrongColorer::kMaxColors)
    throw std::invalid_argument("decide_list: more than 30 distinct colors");
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(engine.edge_total()), 0);
  for (int i = 0; i < engine.edge_total(); ++i) {
    const auto& list = lists.at(engine.edges()[static_cast<std::size_t>(i)]);
    if (list.empty()) return std::nullopt;
    for (int c : list) {
      const auto pos = std::lower_bound(palette.begin(), palette.end(), c) - palette.begin();
      masks[static_cast<std::size_t>(i)] |= std::uint32_t{1} << pos;
    }
  }
  const bool uniform =
      std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return m == masks[0]; });
  const bool full = !masks.empty() && masks[0] == (palette.size() >= 32
                                                       ? ~std::uint32_t{0}
                                                       : (std::uint32_t{1} << palette.size()) - 1);
  const auto result = engine.solve(masks, static_cast<int>(palette.size()),
                                   uniform && full && engine.edge_total() > 0, {});
  if (!result) return std::nullopt;
  return detail::indices_to_coloring(engine, *result, &palette);
}

namespace detail {

/// Greedy clique in the conflict graph: a cheap, sound lower bound for the
/// strong chromatic index.
inline int conflict_clique_bound(const Graph& conf) {
  int best = conf.vertex_count() > 0 ? 1 : 0;
  for (int seed = 0; seed < conf.vertex_count(); ++seed) {
    std::vector<int> clique{seed};
    for (int cand : conf.neighbors(seed)) {
      const bool joins = std::all_of(clique.begin(), clique.end(),
                                     [&](int x) { return conf.has_edge(cand, x); });
      if (joins) clique.push_back(cand);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace detail

/// Exact strong chromatic index; 0 for edgeless graphs.
inline int chi_strong(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  const int lower = detail::conflict_clique_bound(conflict_graph(g));
  for (int k = lower; k <= g.edge_count(); ++k)
    if (decide_strong(g, k)) return k;
  return g.edge_count();  // unreachable: m distinct colors always work
}

/// Independent oracle: plain lexicographic enumeration of color
/// assignments for ascending k, pruned only by the conflict check on the
/// current prefix. No ordering heuristics and no symmetry reduction, so it
/// shares nothing with the engine above. Refuses more than 12 edges.
inline int chi_strong_bruteforce(const Graph& g) {
  const int m = g.edge_count();
  if (m > 12) throw std::invalid_argument("chi_strong_bruteforce: too many edges");
  if (m == 0) return 0;
  const Graph conf = conflict_graph(g);
  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= m; ++k) {
    // DFS over prefixes in edge order.
    int pos = 0;
    while (true) {
      if (pos == m) return k;
      bool advanced = false;
      for (int c = assign[static_cast<std::size_t>(pos)] + 1; c <= k; ++c) {
        bool ok = true;
        for (int j : conf.neighbors(pos))
          if (j < pos && assign[static_cast<std::size_t>(j)] == c) { ok = false; break; }
        if (ok) {
          assign[static_cast<std::size_t>(pos)] = c;
          ++pos;
          if (pos < m) assign[static_cast<std::size_t>(pos)] = 0;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        assign[static_cast<std::size_t>(pos)] = 0;
        --pos;
        if (pos < 0) break;
      }
    }
  }
  return m;
}

/// Decision-procedure seam: the reducibility checker and the CLI accept any
/// implementation of this interface, so a different backend (e.g. a SAT
/// encoding) can be dropped in without touching callers.
class DecisionProcedure {
 public:
  virtual ~DecisionProcedure() = default;
  virtual std::optional<Coloring> decide(const Graph& g, int k, const PartialColoring& fixed) = 0;
};

class BacktrackingProcedure final : public DecisionProcedure {
 public:
  std::optional<Coloring> decide(const Graph& g, int k, const PartialColoring& fixed) override {
    return decide_strong(g, k, fixed);
  }
};

}  // namespace scix
