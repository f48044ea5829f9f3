#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "scix/catalog.hpp"
#include "scix/mad.hpp"

using namespace scix;

TEST_CASE("mad on named graphs") {
  REQUIRE(mad_exact(catalog_get("cycle", {7})) == Rational(2));
  REQUIRE(mad_exact(catalog_get("house")) == Rational(7, 3));
  REQUIRE(mad_exact(catalog_get("fig3")) == Rational(5, 2));
  REQUIRE(mad_exact(catalog_get("ex3-theta", {4, 5, 4})) == Rational(13, 6));
  REQUIRE(mad_exact(catalog_get("complete", {4})) == Rational(3));
  REQUIRE(mad_exact(catalog_get("S", {3})) == Rational(2));
  REQUIRE(mad_exact(parse_edge_list("n 2\ne 0 1\n")) == Rational(1));
  REQUIRE(mad_exact(Graph(3)) == Rational(0));
}

TEST_CASE("mad brute force on named graphs") {
  REQUIRE(mad_bruteforce(catalog_get("complete", {4})) == Rational(3));
  REQUIRE(mad_bruteforce(catalog_get("S", {3})) == Rational(2));
  REQUIRE(mad_bruteforce(parse_edge_list("n 2\ne 0 1\n")) == Rational(1));
  REQUIRE_THROWS_AS(mad_bruteforce(Graph(25)), std::invalid_argument);
}

TEST_CASE("mad_exact equals the subset oracle on random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    REQUIRE(mad_exact(g) == mad_bruteforce(g));
  }
}

TEST_CASE("mad_exact equals the subset oracle on sparse near-cubic graphs") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6 + 2 * static_cast<int>(rng() % 8);  // up to 20
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    for (int tries = 0; tries < n / 2; ++tries) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v && !g.has_edge(u, v) && g.degree(u) < 3 && g.degree(v) < 3) g.add_edge(u, v);
    }
    REQUIRE(mad_exact(g) == mad_bruteforce(g));
  }
}

TEST_CASE("mad on catalog graphs of oracle size matches the oracle") {
  for (const char* name : {"prism", "house", "fig3", "cube"})
    REQUIRE(mad_exact(catalog_get(name)) == mad_bruteforce(catalog_get(name)));
  REQUIRE(mad_exact(catalog_get("S", {7})) == mad_bruteforce(catalog_get("S", {7})));
  REQUIRE(mad_exact(theta_graph(4, 5, 4)) == mad_bruteforce(theta_graph(4, 5, 4)));
}
