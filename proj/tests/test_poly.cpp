#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "scix/configs.hpp"
#include "scix/poly.hpp"
#include "scix/solver.hpp"

using namespace scix;

namespace {

/// Independent oracle: full expansion via SparsePoly products, constants
/// treated as extra variables var_count().., then the coefficient of
/// target with every constant at degree zero.
BigInt naive_coefficient(const FactorSystem& fs, const Monomial& target) {
  SparsePoly product = SparsePoly::constant(1);
  for (const Factor& f : fs.factors()) {
    const int rhs = f.rhs_is_var ? f.rhs : fs.var_count() + f.rhs;
    product = product * (SparsePoly::variable(f.var) - SparsePoly::variable(rhs));
  }
  return product.coefficient(target);
}

FactorSystem random_system(std::mt19937& rng, int max_factors) {
  const int nvars = 2 + static_cast<int>(rng() % 3);
  const int nconsts = static_cast<int>(rng() % 3);
  std::vector<std::string> vars, consts;
  for (int i = 0; i < nvars; ++i) vars.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < nconsts; ++i) consts.push_back("c" + std::to_string(i + 1));
  FactorSystem fs(std::move(vars), std::move(consts));
  const int nf = 1 + static_cast<int>(rng() % max_factors);
  for (int i = 0; i < nf; ++i) {
    const int lhs = static_cast<int>(rng() % nvars);
    if (nconsts > 0 && rng() % 3 == 0) {
      fs.add_var_const(lhs, static_cast<int>(rng() % nconsts));
    } else {
      int rhs = static_cast<int>(rng() % nvars);
      if (rhs == lhs) rhs = (rhs + 1) % nvars;
      fs.add_var_var(lhs, rhs);
    }
  }
  return fs;
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic basics") {
  const SparsePoly x = SparsePoly::variable(0);
  const SparsePoly y = SparsePoly::variable(1);
  const SparsePoly p = (x - y) * (x + y);
  REQUIRE(p.coefficient(Monomial().mul(0, 2)) == 1);
  REQUIRE(p.coefficient(Monomial().mul(1, 2)) == -1);
  REQUIRE(p.coefficient(Monomial().mul(0).mul(1)) == 0);
  REQUIRE(p.term_count() == 2);  // the cross terms cancel

  const SparsePoly zero = (x - y) - (x - y);
  REQUIRE(zero.term_count() == 0);
}

TEST_CASE("caterpillar polynomial has the printed factor counts") {
  const FactorSystem fs = caterpillar_polynomial(8);
  REQUIRE(fs.var_count() == 15);
  REQUIRE(fs.const_count() == 6);
  REQUIRE(fs.degree() == 60);
  int var_const = 0, var_var = 0;
  for (const Factor& f : fs.factors()) (f.rhs_is_var ? var_var : var_const)++;
  REQUIRE(var_const == 16);  // 4 distance-two conflicts + two boundary triples each side
  REQUIRE(var_var == 44);    // 11 x-x + 7 y-y + 26 y-x
}

TEST_CASE("caterpillar polynomial at t=3") {
  const FactorSystem fs = caterpillar_polynomial(3);
  REQUIRE(fs.var_count() == 5);  // 2 interior + 3 pendant variables
  REQUIRE(fs.degree() == 25);
  REQUIRE_THROWS_AS(caterpillar_polynomial(2), std::invalid_argument);
}

TEST_CASE("factor list text emission") {
  FactorSystem fs({"x1", "x2"}, {"c1"});
  fs.add_var_var(0, 1);
  fs.add_var_const(0, 0);
  REQUIRE(fs.emit_text() == "x1 - x2\nx1 - c1\n");
}

TEST_CASE("coefficient_of on single factors") {
  FactorSystem fs({"x1", "x2"}, {});
  fs.add_var_var(0, 1);
  REQUIRE(coefficient_of(fs, Monomial().mul(0)) == 1);
  REQUIRE(coefficient_of(fs, Monomial().mul(1)) == -1);

  FactorSystem fc({"x1"}, {"c1", "c2"});
  fc.add_var_const(0, 0);
  fc.add_var_const(0, 1);
  REQUIRE(coefficient_of(fc, Monomial().mul(0, 2)) == 1);
}

TEST_CASE("top_coefficient reduces var-const factors") {
  FactorSystem fc({"x1"}, {"c1"});
  fc.add_var_const(0, 0);
  REQUIRE(top_coefficient(fc, Monomial().mul(0)) == 1);

  // a variable capped above its total occurrences contributes nothing
  FactorSystem fs({"x1", "x2", "x3", "x4"}, {});
  fs.add_var_var(0, 1);
  fs.add_var_var(2, 3);
  REQUIRE(top_coefficient(fs, Monomial().mul(0, 2)) == 0);

  // degree mismatch violates the precondition
  REQUIRE_THROWS_AS(top_coefficient(fs, Monomial().mul(0)), std::invalid_argument);
}

TEST_CASE("sign conventions: flipping a factor negates the coefficient") {
  FactorSystem ab({"a", "b"}, {});
  ab.add_var_var(0, 1);
  FactorSystem ba({"a", "b"}, {});
  ba.add_var_var(1, 0);
  REQUIRE(top_coefficient(ab, Monomial().mul(0)) == -top_coefficient(ba, Monomial().mul(0)));
}

TEST_CASE("swapping adjacent factors leaves coefficients unchanged") {
  FactorSystem one({"a", "b", "c"}, {});
  one.add_var_var(0, 1);
  one.add_var_var(1, 2);
  FactorSystem two({"a", "b", "c"}, {});
  two.add_var_var(1, 2);
  two.add_var_var(0, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const Monomial m = Monomial().mul(i).mul(j);
      REQUIRE(coefficient_of(one, m) == coefficient_of(two, m));
    }
}

TEST_CASE("coefficient_of agrees with naive expansion on small systems") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const FactorSystem fs = random_system(rng, 12);
    // random target of degree at most the factor count
    Monomial target;
    int degree_left = fs.degree();
    for (int v = 0; v < fs.var_count() && degree_left > 0; ++v) {
      const int e = static_cast<int>(rng() % 4);
      target.mul(v, std::min(e, degree_left));
      degree_left -= std::min(e, degree_left);
    }
    REQUIRE(coefficient_of(fs, target) == naive_coefficient(fs, target));
  }
}

TEST_CASE("top_coefficient equals coefficient_of wherever both are defined") {
  std::mt19937 rng(321);
  int compared = 0;
  while (compared < 100) {
    const FactorSystem fs = random_system(rng, 8);
    // spread the full degree across the variables at random
    std::vector<int> exps(static_cast<std::size_t>(fs.var_count()), 0);
    for (int d = 0; d < fs.degree(); ++d) ++exps[rng() % exps.size()];
    Monomial target;
    for (int v = 0; v < fs.var_count(); ++v) target.mul(v, exps[static_cast<std::size_t>(v)]);
    ++compared;
    REQUIRE(top_coefficient(fs, target) == coefficient_of(fs, target));
  }
}

TEST_CASE("the 8-caterpillar certificate coefficient is -2") {
  const CnCertificate cert = cn_certificate(ConfigSpec{ConfigFamily::Caterpillar, {8}, 3, 5});
  REQUIRE(cert.coefficient == -2);
  REQUIRE(cert.list_size == 5);
  REQUIRE(cert.ok);

  const FactorSystem fs = caterpillar_polynomial(8);
  Monomial target;
  for (int v = 0; v < fs.var_count(); ++v) target.mul(v, 4);
  REQUIRE(top_coefficient(fs, target) == -2);
}

TEST_CASE("the 7-caterpillar has no certificate at list size 5") {
  const CnCertificate cert = cn_certificate(ConfigSpec{ConfigFamily::Caterpillar, {7}, 3, 5});
  REQUIRE(cert.coefficient == 0);
  REQUIRE_FALSE(cert.ok);
}

TEST_CASE("degree mismatch gives no certificate") {
  const CnCertificate cert = cn_certificate(ConfigSpec{ConfigFamily::Caterpillar, {8}, 3, 4});
  REQUIRE(cert.coefficient == 0);
  REQUIRE_FALSE(cert.ok);
}

TEST_CASE("cn_certificate rejects unsupported families") {
  REQUIRE_THROWS_AS(cn_certificate(ConfigSpec{ConfigFamily::Y, {1, 6, 7}, 3, 5}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(cn_certificate(ConfigSpec{ConfigFamily::Caterpillar, {6}, 4, 7}),
                    std::invalid_argument);
}

TEST_CASE("a nonzero certificate really does guarantee list extensions") {
  // random conflict-free boundary colorings and random 5-lists on the
  // interior must always extend, matching the nonzero t=8 coefficient
  const EmbeddedConfig cfg = build_config(ConfigSpec{ConfigFamily::Caterpillar, {8}, 3, 5});
  const std::vector<EdgeId> order = boundary_order(cfg);
  std::mt19937 rng(777);
  const Graph conf = conflict_graph(cfg.graph);
  const auto edges = cfg.graph.edges();
  auto conflicting = [&](const EdgeId& a, const EdgeId& b) {
    const auto ia = std::lower_bound(edges.begin(), edges.end(), a) - edges.begin();
    const auto ib = std::lower_bound(edges.begin(), edges.end(), b) - edges.begin();
    return conf.has_edge(static_cast<int>(ia), static_cast<int>(ib));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    // random conflict-free boundary coloring over a wide palette
    ListAssignment lists;
    for (;;) {
      lists.clear();
      bool ok = true;
      std::vector<std::pair<EdgeId, int>> chosen;
      for (const EdgeId& e : order) {
        const int c = 1 + static_cast<int>(rng() % 8);
        for (const auto& [f, fc] : chosen)
          if (fc == c && conflicting(e, f)) ok = false;
        chosen.emplace_back(e, c);
      }
      if (!ok) continue;
      for (const auto& [e, c] : chosen) lists[e] = {c};
      break;
    }
    for (const EdgeId& e : cfg.interior) {
      std::set<int> list;
      while (list.size() < 5) list.insert(1 + static_cast<int>(rng() % 10));
      lists[e] = std::vector<int>(list.begin(), list.end());
    }
    REQUIRE(decide_list(cfg.graph, lists).has_value());
  }
}
