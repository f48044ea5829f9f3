#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "scix/graph.hpp"

using namespace scix;

TEST_CASE("edge list parses declared vertices and edges") {
  const Graph g = parse_edge_list("n 3\ne 0 1\ne 1 2\n");
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list parses the prism") {
  const Graph g = parse_edge_list(
      "n 6\ne 0 1\ne 1 2\ne 0 2\ne 3 4\ne 4 5\ne 3 5\ne 0 3\ne 1 4\ne 2 5\n");
  REQUIRE(g.vertex_count() == 6);
  REQUIRE(g.edge_count() == 9);
  for (int v = 0; v < 6; ++v) REQUIRE(g.degree(v) == 3);
}

TEST_CASE("edge list rejects bad input") {
  REQUIRE_THROWS_AS(parse_edge_list("n 2\ne 0 0\n"), ParseError);       // self-loop
  REQUIRE_THROWS_AS(parse_edge_list("n 2\ne 0 1\ne 0 1\n"), ParseError);  // duplicate
  REQUIRE_THROWS_AS(parse_edge_list("n 2\ne 0 2\n"), ParseError);       // out of range
  REQUIRE_THROWS_AS(parse_edge_list("e 0 1\n"), ParseError);            // edge before n
  REQUIRE_THROWS_AS(parse_edge_list("n 2\ne 1 0\n"), ParseError);       // u >= v
  REQUIRE_THROWS_AS(parse_edge_list("n 2\nq 0 1\n"), ParseError);       // unknown tag
  REQUIRE_THROWS_AS(parse_edge_list(""), ParseError);                   // empty
}

TEST_CASE("edge list comments and blank lines are ignored") {
  const Graph g = parse_edge_list("# a path\n\nn 3\n# mid\ne 0 1 # trailing\ne 1 2\n");
  REQUIRE(g.edge_count() == 2);
}

TEST_CASE("edge list round-trips exactly") {
  const std::string canon = "n 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n";
  const Graph g = parse_edge_list(canon);
  REQUIRE(emit_edge_list(g) == canon);
  REQUIRE(parse_edge_list(emit_edge_list(g)) == g);
}

TEST_CASE("graph6 decodes the two-vertex graphs") {
  const Graph k2 = parse_graph6("A_");
  REQUIRE(k2.vertex_count() == 2);
  REQUIRE(k2.has_edge(0, 1));
  const Graph e2 = parse_graph6("A?");
  REQUIRE(e2.vertex_count() == 2);
  REQUIRE(e2.edge_count() == 0);
}

TEST_CASE("graph6 emits K2 back") { REQUIRE(emit_graph6(parse_graph6("A_")) == "A_"); }

TEST_CASE("graph6 rejects bad input") {
  REQUIRE_THROWS_AS(parse_graph6("A"), ParseError);       // truncated bits
  REQUIRE_THROWS_AS(parse_graph6("A_ _"), ParseError);    // invalid char (space)
  REQUIRE_THROWS_AS(parse_graph6(std::string(1, char(126)) + "???"), ParseError);  // long form
  REQUIRE_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round-trips random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    REQUIRE(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("graph construction guards invariants") {
  Graph g(3);
  g.add_edge(0, 1);
  REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  REQUIRE(g.neighbors(1) == std::vector<int>{0});
}
