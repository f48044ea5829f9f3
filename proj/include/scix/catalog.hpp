#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scix/configs.hpp"
#include "scix/graph.hpp"
#include "scix/structure.hpp"

namespace scix {

/// Deterministic constructors for the named graphs used throughout the test
/// and regression material. Labelings are fixed and documented here so
/// derived fixtures stay reproducible:
///  - prism: triangles 0-1-2 and 3-4-5, matching i -- i+3
///  - house: 5-cycle 0-1-2-3-4 plus apex 5 adjacent to 1 and 3
///  - fig3: 5-cycle 0-1-2-3-4(top)-0 is not used; see below
///  - S 3: triangle 0-1-2, pendant i+3 at i
///  - S 4: 4-cycle 0-1-2-3, pendants 4 at 0 and 5 at 1
///  - S k (k>=5): k-cycle 0..k-1, pendant k+i at i
///  - theta l1,l2,l3: branch vertices 0 and 1, three paths of the given
///    LENGTHS in parameter order (figure-subscript convention)
///  - ex3-theta: the 3-expansion of theta
///
/// fig3 labels: horizontal path 0-1-2-3, top 4 (adjacent 0,3), bottom 5
/// (adjacent 0,3), right column 6 (adjacent 4), 7 (adjacent 5, 6).
inline Graph catalog_get(const std::string& name, const std::vector<int>& params = {}) {
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("catalog: '" + name + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "prism") {
    want(0);
    Graph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(0, 2);
    g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(3, 5);
    g.add_edge(0, 3); g.add_edge(1, 4); g.add_edge(2, 5);
    return g;
  }
  if (name == "house") {
    want(0);
    Graph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 3); g.add_edge(3, 4); g.add_edge(0, 4);
    g.add_edge(1, 5); g.add_edge(3, 5);
    return g;
  }
  if (name == "fig3") {
    want(0);
    Graph g(8);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 3);
    g.add_edge(0, 4); g.add_edge(3, 4);
    g.add_edge(0, 5); g.add_edge(3, 5);
    g.add_edge(4, 6); g.add_edge(6, 7); g.add_edge(5, 7);
    return g;
  }
  if (name == "cube") {
    want(0);
    Graph g(8);
    for (int v = 0; v < 8; ++v)
      for (int bit : {1, 2, 4})
        if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
    return g;
  }
  if (name == "path") {
    want(1);
    if (params[0] < 1) throw std::invalid_argument("catalog: path needs n >= 1");
    Graph g(params[0]);
    for (int v = 0; v + 1 < params[0]; ++v) g.add_edge(v, v + 1);
    return g;
  }
  if (name == "cycle") {
    want(1);
    if (params[0] < 3) throw std::invalid_argument("catalog: cycle needs n >= 3");
    Graph g(params[0]);
    for (int v = 0; v < params[0]; ++v) g.add_edge(v, (v + 1) % params[0]);
    return g;
  }
  if (name == "complete") {
    want(1);
    Graph g(params[0]);
    for (int u = 0; u < params[0]; ++u)
      for (int v = u + 1; v < params[0]; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "star") {
    want(1);
    if (params[0] < 0) throw std::invalid_argument("catalog: star needs n >= 0");
    Graph g(params[0] + 1);
    for (int v = 1; v <= params[0]; ++v) g.add_edge(0, v);
    return g;
  }
  if (name == "S") {
    want(1);
    const int k = params[0];
    if (k < 3) throw std::invalid_argument("catalog: S needs k >= 3");
    if (k == 3) {
      Graph g(6);
      g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(0, 2);
      g.add_edge(0, 3); g.add_edge(1, 4); g.add_edge(2, 5);
      return g;
    }
    if (k == 4) {
      Graph g(6);
      g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 3); g.add_edge(0, 3);
      g.add_edge(0, 4); g.add_edge(1, 5);
      return g;
    }
    Graph g(2 * k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    for (int v = 0; v < k; ++v) g.add_edge(v, k + v);
    return g;
  }
  if (name == "theta" || name == "ex3-theta") {
    // The catalog names follow the figure-subscript convention: parameters
    // are the three path LENGTHS (theta_graph itself takes the interior
    // 2-vertex counts, one less per path). "theta 4,5,4" is the 12-vertex
    // core whose 3-expansion has mad 13/6.
    want(3);
    for (int len : params)
      if (len < 1) throw std::invalid_argument("catalog: theta path lengths must be positive");
    const Graph core = theta_graph(params[0] - 1, params[1] - 1, params[2] - 1);
    return name == "theta" ? core : expand(core, 3);
  }
  throw std::invalid_argument("catalog: unknown graph '" + name + "'");
}

inline std::vector<std::string> catalog_names() {
  return {"prism", "house", "fig3", "cube", "path", "cycle", "complete", "star", "S", "theta", "ex3-theta"};
}

/// One pinned property of a named graph. `source` classifies where the
/// expected value comes from: "stated" (a published value), "construction"
/// (forced by the definition) or "computed" (a frozen computed fixture).
struct CatalogExpectation {
  std::string property;  // girth | mad | chi_s | chi_s_gt | chi_s_le | vertices
  std::string value;
  std::string source;
};

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  std::vector<CatalogExpectation> expected;

  std::string display() const {
    std::ostringstream out;
    out << name;
    for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : " ") << params[i];
    return out.str();
  }
};

/// The regression table behind the `catalog` verification scope.
inline std::vector<CatalogEntry> catalog_expectations() {
  return {
      {"prism", {}, {{"vertices", "6", "construction"},
                     {"girth", "3", "construction"},
                     {"mad", "3", "construction"},
                     {"chi_s", "9", "stated"}}},
      {"house", {}, {{"girth", "4", "construction"},
                     {"mad", "7/3", "stated"},
                     {"chi_s_gt", "6", "stated"},
                     {"chi_s", "7", "computed"}}},
      {"fig3", {}, {{"mad", "5/2", "stated"},
                    {"chi_s_gt", "7", "stated"},
                    {"chi_s", "8", "computed"}}},
      {"S", {3}, {{"vertices", "6", "construction"},
                  {"mad", "2", "stated"},
                  {"chi_s", "6", "stated"}}},
      {"S", {4}, {{"mad", "2", "stated"}, {"chi_s", "6", "stated"}}},
      {"S", {7}, {{"mad", "2", "stated"}, {"chi_s", "6", "stated"}}},
      {"S", {5}, {{"chi_s_le", "5", "stated"}}},
      {"S", {6}, {{"chi_s_le", "5", "stated"}}},
      {"S", {8}, {{"chi_s_le", "5", "stated"}}},
      {"theta", {4, 5, 4}, {{"vertices", "12", "construction"},
                            {"girth", "8", "construction"}}},
      {"ex3-theta", {4, 5, 4}, {{"vertices", "22", "computed"},
                                {"mad", "13/6", "stated"},
                                {"chi_s", "6", "stated"}}},
      {"cycle", {7}, {{"mad", "2", "construction"}, {"girth", "7", "construction"}}},
  };
}

}  // namespace scix
