#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "scix/catalog.hpp"
#include "scix/graph.hpp"
#include "scix/structure.hpp"

using namespace scix;

TEST_CASE("girth on cycles, prism and forests") {
  REQUIRE(girth(catalog_get("cycle", {5})) == 5);
  REQUIRE(girth(catalog_get("prism")) == 3);
  REQUIRE_FALSE(girth(catalog_get("path", {4})).has_value());
  REQUIRE(girth(catalog_get("cube")) == 4);
  REQUIRE(girth(theta_graph(4, 5, 4)) == 10);
}

TEST_CASE("girth agrees with brute-force shortest cycle on random graphs") {
  // oracle: shortest cycle through each edge via BFS in G - e
  auto brute = [](const Graph& g) -> std::optional<int> {
    int best = -1;
    for (const EdgeId& e : g.edges()) {
      // BFS distance from e.a to e.b avoiding the edge e
      std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
      std::vector<int> queue{e.a};
      dist[static_cast<std::size_t>(e.a)] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const int v = queue[i];
        for (int w : g.neighbors(v)) {
          if ((v == e.a && w == e.b) || (v == e.b && w == e.a)) continue;
          if (dist[static_cast<std::size_t>(w)] == -1) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
          }
        }
      }
      if (dist[static_cast<std::size_t>(e.b)] != -1) {
        const int len = dist[static_cast<std::size_t>(e.b)] + 1;
        if (best == -1 || len < best) best = len;
      }
    }
    return best == -1 ? std::nullopt : std::optional<int>(best);
  };
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    REQUIRE(girth(g) == brute(g));
  }
}

TEST_CASE("contract deletes 1-vertices in a single pass") {
  SECTION("pendants removed from an expanded cycle") {
    const Graph g = expand(catalog_get("cycle", {5}), 3);
    const ContractResult res = contract(g);
    REQUIRE(res.graph == catalog_get("cycle", {5}));
  }
  SECTION("no 1-vertices is the identity") {
    const Graph c6 = catalog_get("cycle", {6});
    REQUIRE(contract(c6).graph == c6);
  }
  SECTION("a star loses its leaves in one pass") {
    const ContractResult res = contract(catalog_get("star", {3}));
    REQUIRE(res.graph.vertex_count() == 1);
    REQUIRE(res.graph.edge_count() == 0);
  }
  SECTION("single pass, not iterated: a length-2 pendant path loses only its tip") {
    // triangle with a path of two vertices hanging off vertex 0
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    const ContractResult res = contract(g);
    REQUIRE(res.graph.vertex_count() == 4);  // only the tip (vertex 4) goes
    REQUIRE(res.graph.edge_count() == 4);
    // vertex 3 survives this pass with degree 1 in the result
    const int new3 = res.old_to_new[3];
    REQUIRE(new3 != -1);
    REQUIRE(res.graph.degree(new3) == 1);
    REQUIRE(res.old_to_new[4] == -1);
  }
  SECTION("label maps are inverse") {
    const Graph g = expand(catalog_get("cycle", {6}), 3);
    const ContractResult res = contract(g);
    for (std::size_t nv = 0; nv < res.new_to_old.size(); ++nv)
      REQUIRE(res.old_to_new[static_cast<std::size_t>(res.new_to_old[nv])] == static_cast<int>(nv));
  }
}

TEST_CASE("expand matches the degree recipe") {
  SECTION("one pendant per cycle vertex") {
    const Graph g = expand(catalog_get("cycle", {5}), 3);
    REQUIRE(g.vertex_count() == 10);
    REQUIRE(g.edge_count() == 10);
  }
  SECTION("already d-regular is unchanged") {
    REQUIRE(expand(catalog_get("prism"), 3) == catalog_get("prism"));
  }
  SECTION("two pendants per triangle vertex at d=4") {
    const Graph g = expand(catalog_get("cycle", {3}), 4);
    REQUIRE(g.vertex_count() == 9);
  }
  SECTION("degree above d is rejected") {
    REQUIRE_THROWS_AS(expand(catalog_get("complete", {5}), 3), std::invalid_argument);
  }
  SECTION("vertices of degree below 2 are skipped and reported") {
    std::vector<int> skipped;
    const Graph g = expand(catalog_get("path", {3}), 3, &skipped);
    REQUIRE(skipped == std::vector<int>{0, 2});
    REQUIRE(g.degree(1) == 3);
    REQUIRE(g.degree(0) == 1);
  }
}

TEST_CASE("contract undoes expand on min-degree-2 hosts") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    // random 2-regular-or-more host: a cycle plus random chords
    const int n = 4 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    for (int extra = 0; extra < 2; ++extra) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    const int d = g.max_degree() + static_cast<int>(rng() % 2);
    if (d < 3) continue;
    const ContractResult res = contract(expand(g, d));
    REQUIRE(res.graph == g);
  }
}

TEST_CASE("conflict graph on small named graphs") {
  SECTION("two incident edges") {
    REQUIRE(conflict_graph(catalog_get("path", {3})) == catalog_get("complete", {2}));
  }
  SECTION("star edges pairwise conflict") {
    REQUIRE(conflict_graph(catalog_get("star", {3})) == catalog_get("complete", {3}));
  }
  SECTION("C5 squares to K5") {
    REQUIRE(conflict_graph(catalog_get("cycle", {5})) == catalog_get("complete", {5}));
  }
}

TEST_CASE("conflict graph equals the pairwise-distance oracle on small graphs") {
  // oracle: edges conflict iff their line-graph distance is at most two,
  // computed from scratch distances between edge endpoints
  auto brute = [](const Graph& g) {
    const auto edges = g.edges();
    Graph conf(static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        bool close = false;
        for (int a : {edges[i].a, edges[i].b})
          for (int b : {edges[j].a, edges[j].b})
            if (a == b || g.has_edge(a, b)) close = true;
        if (close) conf.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    return conf;
  };
  std::mt19937 rng(5);
  int tested = 0;
  while (tested < 50) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    if (g.edge_count() > 8) continue;
    ++tested;
    REQUIRE(conflict_graph(g) == brute(g));
  }
}

TEST_CASE("find_threads reports maximal degree-2 runs") {
  SECTION("a broken cycle yields one long thread") {
    // C9 plus a pendant at vertex 0 makes vertex 0 degree 3
    Graph g = catalog_get("cycle", {9});
    g.add_edge(0, g.add_vertex());
    const auto threads = find_threads(g, 8);
    REQUIRE(threads.size() == 1);
    REQUIRE(threads[0].size() == 8);
  }
  SECTION("3-regular graphs have none") { REQUIRE(find_threads(catalog_get("prism"), 1).empty()); }
  SECTION("theta branches are reported at their exact lengths") {
    const auto threads = find_threads(theta_graph(4, 5, 4), 5);
    REQUIRE(threads.size() == 1);
    REQUIRE(threads[0].size() == 5);
    REQUIRE(find_threads(theta_graph(4, 5, 4), 4).size() == 3);
  }
  SECTION("a bare cycle is one cyclic run") {
    const auto threads = find_threads(catalog_get("cycle", {6}), 6);
    REQUIRE(threads.size() == 1);
    REQUIRE(threads[0].size() == 6);
  }
}

TEST_CASE("cut edges and 2-connectivity") {
  SECTION("both path edges are bridges") {
    const auto bridges = cut_edges(catalog_get("path", {3}));
    REQUIRE(bridges == std::vector<EdgeId>{EdgeId(0, 1), EdgeId(1, 2)});
  }
  SECTION("prism has none and is 2-connected") {
    REQUIRE(cut_edges(catalog_get("prism")).empty());
    REQUIRE(is_two_connected(catalog_get("prism")));
  }
  SECTION("two triangles joined by an edge") {
    Graph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(0, 2);
    g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(3, 5);
    g.add_edge(2, 3);
    REQUIRE(cut_edges(g) == std::vector<EdgeId>{EdgeId(2, 3)});
    REQUIRE_FALSE(is_two_connected(g));
  }
  SECTION("paths and stars are not 2-connected") {
    REQUIRE_FALSE(is_two_connected(catalog_get("path", {3})));
    REQUIRE_FALSE(is_two_connected(catalog_get("star", {3})));
  }
}
