#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "scix/configs.hpp"

namespace scix {

using BigInt = mpz_class;

/// Sparse monomial: variable index -> exponent, exponents >= 1 when stored.
class Monomial {
 public:
  Monomial() = default;

  Monomial& mul(int var, int exp = 1) {
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (exp == 0) return *this;
    exps_[var] += exp;
    return *this;
  }

  int exponent(int var) const {
    const auto it = exps_.find(var);
    return it == exps_.end() ? 0 : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }

  const std::map<int, int>& exponents() const { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b.exps_) out.exps_[v] += e;
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::map<int, int> exps_;
};

/// Exact multivariate polynomial over the integers, stored sparsely; zero
/// coefficients are never kept.
class SparsePoly {
 public:
  SparsePoly() = default;

  static SparsePoly constant(BigInt c) {
    SparsePoly p;
    if (c != 0) p.terms_[Monomial()] = std::move(c);
    return p;
  }
  static SparsePoly variable(int var) {
    SparsePoly p;
    p.terms_[Monomial().mul(var)] = 1;
    return p;
  }

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  BigInt coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out = a;
    for (const auto& [m, c] : b.terms_) {
      BigInt& slot = out.terms_[m];
      slot += c;
      if (slot == 0) out.terms_.erase(m);
    }
    return out;
  }

  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly neg;
    for (const auto& [m, c] : b.terms_) neg.terms_[m] = -c;
    return a + neg;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        const Monomial m = ma * mb;
        BigInt& slot = out.terms_[m];
        slot += ca * cb;
        if (slot == 0) out.terms_.erase(m);
      }
    return out;
  }

 private:
  std::map<Monomial, BigInt> terms_;
};

/// One linear factor (v - rhs), rhs either another variable or a boundary
/// constant symbol.
struct Factor {
  int var;           // index into the variable set
  bool rhs_is_var;   // variable vs constant symbol
  int rhs;           // variable index, or constant index
};

/// An ordered product of linear factors over a declared variable set and a
/// set of formal boundary constants. The construction order is kept
/// verbatim (signs are read straight off the printed products); expansion
/// is free to reassociate since the product is commutative.
///
/// Constants are formal symbols: coefficient queries are always for
/// monomials of degree zero in every constant.
class FactorSystem {
 public:
  FactorSystem(std::vector<std::string> var_names, std::vector<std::string> const_names)
      : var_names_(std::move(var_names)), const_names_(std::move(const_names)) {}

  int var_count() const { return static_cast<int>(var_names_.size()); }
  int const_count() const { return static_cast<int>(const_names_.size()); }
  int degree() const { return static_cast<int>(factors_.size()); }
  const std::vector<Factor>& factors() const { return factors_; }
  const std::string& var_name(int v) const { return var_names_.at(static_cast<std::size_t>(v)); }
  const std::string& const_name(int c) const { return const_names_.at(static_cast<std::size_t>(c)); }

  int var(const std::string& name) const {
    const auto it = std::find(var_names_.begin(), var_names_.end(), name);
    if (it == var_names_.end()) throw std::invalid_argument("FactorSystem: unknown variable " + name);
    return static_cast<int>(it - var_names_.begin());
  }

  void add_var_var(int lhs, int rhs) {
    check_var(lhs);
    check_var(rhs);
    factors_.push_back({lhs, true, rhs});
  }
  void add_var_const(int lhs, int c) {
    check_var(lhs);
    if (c < 0 || c >= const_count()) throw std::invalid_argument("FactorSystem: constant out of range");
    factors_.push_back({lhs, false, c});
  }

  /// One factor per line, e.g. "x1 - x2" or "x1 - c1".
  std::string emit_text() const {
    std::ostringstream out;
    for (const Factor& f : factors_)
      out << var_name(f.var) << " - " << (f.rhs_is_var ? var_name(f.rhs) : const_name(f.rhs)) << "\n";
    return out.str();
  }

 private:
  void check_var(int v) const {
    if (v < 0 || v >= var_count()) throw std::invalid_argument("FactorSystem: variable out of range");
  }

  std::vector<Factor> factors_;
  std::vector<std::string> var_names_;
  std::vector<std::string> const_names_;
};

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint8_t>& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t b : key) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Capped expansion of a product of (var - var) factors: monomials whose
/// exponent leaves a variable unable to reach its exact cap, or pushes it
/// past the cap, are dropped as they are generated. The answer is the
/// coefficient of the monomial with every variable exactly at its cap.
///
/// Factors are processed in ascending max-variable order; with path-local
/// systems this keeps the live frontier (and hence the intermediate
/// support) small.
inline BigInt expand_var_var_capped(std::vector<Factor> factors, const std::vector<int>& caps) {
  const int nvars = static_cast<int>(caps.size());
  for (int c : caps)
    if (c < 0) return 0;
  std::stable_sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    return std::max(a.var, a.rhs) < std::max(b.var, b.rhs);
  });
  // occurrences of each variable among factors i.. (suffix counts)
  const int nf = static_cast<int>(factors.size());
  std::vector<std::vector<int>> remaining_after(static_cast<std::size_t>(nf + 1),
                                                std::vector<int>(static_cast<std::size_t>(nvars), 0));
  for (int i = nf - 1; i >= 0; --i) {
    remaining_after[static_cast<std::size_t>(i)] = remaining_after[static_cast<std::size_t>(i + 1)];
    ++remaining_after[static_cast<std::size_t>(i)][static_cast<std::size_t>(factors[static_cast<std::size_t>(i)].var)];
    ++remaining_after[static_cast<std::size_t>(i)][static_cast<std::size_t>(factors[static_cast<std::size_t>(i)].rhs)];
  }
  for (int v = 0; v < nvars; ++v)
    if (remaining_after[0][static_cast<std::size_t>(v)] < caps[static_cast<std::size_t>(v)])
      return 0;  // the variable cannot possibly reach its cap

  using Key = std::vector<std::uint8_t>;
  using Map = std::unordered_map<Key, BigInt, VecHash>;
  Map support;
  support.emplace(Key(static_cast<std::size_t>(nvars), 0), BigInt(1));

  for (int i = 0; i < nf; ++i) {
    const Factor& f = factors[static_cast<std::size_t>(i)];
    const auto& rem = remaining_after[static_cast<std::size_t>(i + 1)];
    Map next;
    next.reserve(support.size() * 2);
    auto feasible = [&](const Key& key, int grow_var) {
      for (int v : {f.var, f.rhs}) {
        const int exp = key[static_cast<std::size_t>(v)] + (v == grow_var ? 1 : 0);
        if (exp > caps[static_cast<std::size_t>(v)]) return false;
        if (exp + rem[static_cast<std::size_t>(v)] < caps[static_cast<std::size_t>(v)]) return false;
        if (f.var == f.rhs) break;  // degenerate (x - x) factor: check once
      }
      return true;
    };
    auto add_term = [&next](Key&& key, BigInt delta) {
      const auto [it, inserted] = next.try_emplace(std::move(key), delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) next.erase(it);
      }
    };
    for (const auto& [key, coef] : support) {
      if (feasible(key, f.var)) {
        Key grown = key;
        ++grown[static_cast<std::size_t>(f.var)];
        add_term(std::move(grown), coef);
      }
      if (feasible(key, f.rhs)) {
        Key grown = key;
        ++grown[static_cast<std::size_t>(f.rhs)];
        add_term(std::move(grown), -coef);
      }
    }
    support = std::move(next);
    if (support.empty()) return 0;
  }
  Key target(caps.begin(), caps.end());
  const auto it = support.find(target);
  return it == support.end() ? BigInt(0) : it->second;
}

}  // namespace detail

/// Exact coefficient of `target` (constants at degree zero) in the fully
/// expanded product. Per-variable exponents are capped at the target's
/// exponents during expansion; constants carry cap 0, so a var-const
/// factor can only contribute its variable.
inline BigInt coefficient_of(const FactorSystem& fs, const Monomial& target) {
  if (target.total_degree() > fs.degree())
    throw std::invalid_argument("coefficient_of: target degree exceeds product degree");
  const int nv = fs.var_count();
  const int nc = fs.const_count();
  std::vector<int> caps(static_cast<std::size_t>(nv + nc), 0);
  for (const auto& [v, e] : target.exponents()) {
    if (v < 0 || v >= nv) throw std::invalid_argument("coefficient_of: target names a non-variable");
    caps[static_cast<std::size_t>(v)] = e;
  }
  // Uniform treatment: constants become variables nv..nv+nc-1 with cap 0.
  std::vector<Factor> factors = fs.factors();
  for (Factor& f : factors)
    if (!f.rhs_is_var) {
      f.rhs = nv + f.rhs;
      f.rhs_is_var = true;
    }
  return detail::expand_var_var_capped(std::move(factors), caps);
}

/// Fast path for the top-degree case (target degree equals the number of
/// factors): every var-const factor is forced to contribute its variable,
/// the target shrinks accordingly, and only the var-var factors are
/// expanded. Throws when the precondition fails.
inline BigInt top_coefficient(const FactorSystem& fs, const Monomial& target) {
  if (target.total_degree() != fs.degree())
    throw std::invalid_argument("top_coefficient: target degree must equal the factor count");
  const int nv = fs.var_count();
  std::vector<int> caps(static_cast<std::size_t>(nv), 0);
  for (const auto& [v, e] : target.exponents()) {
    if (v < 0 || v >= nv) throw std::invalid_argument("top_coefficient: target names a non-variable");
    caps[static_cast<std::size_t>(v)] = e;
  }
  std::vector<Factor> reduced;
  reduced.reserve(fs.factors().size());
  for (const Factor& f : fs.factors()) {
    if (f.rhs_is_var) {
      reduced.push_back(f);
    } else {
      if (--caps[static_cast<std::size_t>(f.var)] < 0) return 0;
    }
  }
  return detail::expand_var_var_capped(std::move(reduced), caps);
}

/// The conflict product for a t-caterpillar: pendant-edge variables
/// y1..yt, interior-edge variables x1..x_{t-1}, and six boundary constants
/// c1..c6 for the anchor edges. Factors appear in the printed order:
/// the four distance-two boundary conflicts, the four boundary triples,
/// then x-x (j-i in {1,2}), y-y (j-i = 1) and y-x (i-j in {-1,0,1,2})
/// difference products. t = 8 gives 60 factors over 15 variables.
///
/// Variable ids interleave along the path (y1, x1, y2, x2, ...) so that
/// ascending id order is path order for the expansion.
inline FactorSystem caterpillar_polynomial(int t) {
  if (t < 3) throw std::invalid_argument("caterpillar_polynomial: t must be at least 3");
  std::vector<std::string> vars(static_cast<std::size_t>(2 * t - 1));
  const auto y = [&](int i) { return 2 * (i - 1); };      // y_i, 1 <= i <= t
  const auto x = [&](int i) { return 2 * i - 1; };        // x_i, 1 <= i <= t-1
  for (int i = 1; i <= t; ++i) vars[static_cast<std::size_t>(y(i))] = "y" + std::to_string(i);
  for (int i = 1; i <= t - 1; ++i) vars[static_cast<std::size_t>(x(i))] = "x" + std::to_string(i);
  std::vector<std::string> consts;
  for (int i = 1; i <= 6; ++i) consts.push_back("c" + std::to_string(i));
  FactorSystem fs(std::move(vars), std::move(consts));
  const auto c = [](int i) { return i - 1; };
  // distance-two conflicts with the anchor path edges c3, c4
  fs.add_var_const(y(2), c(3));
  fs.add_var_const(x(2), c(3));
  fs.add_var_const(y(t - 1), c(4));
  fs.add_var_const(x(t - 2), c(4));
  // boundary triples at both anchors
  for (int i = 1; i <= 3; ++i) fs.add_var_const(x(1), c(i));
  for (int i = 1; i <= 3; ++i) fs.add_var_const(y(1), c(i));
  for (int i = 4; i <= 6; ++i) fs.add_var_const(x(t - 1), c(i));
  for (int i = 4; i <= 6; ++i) fs.add_var_const(y(t), c(i));
  // interior-interior: x_i conflicts x_j for j - i in {1, 2}
  for (int i = 1; i <= t - 1; ++i)
    for (int j : {i + 1, i + 2})
      if (j <= t - 1) fs.add_var_var(x(i), x(j));
  // pendant-pendant: y_i conflicts y_{i+1}
  for (int i = 1; i <= t - 1; ++i) fs.add_var_var(y(i), y(i + 1));
  // pendant-interior: y_i conflicts x_j for i - j in {-1, 0, 1, 2}
  for (int j = 1; j <= t - 1; ++j)
    for (int i : {j - 1, j, j + 1, j + 2})
      if (1 <= i && i <= t) fs.add_var_var(y(i), x(j));
  return fs;
}

struct CnCertificate {
  BigInt coefficient;
  int list_size = 0;
  bool ok = false;
};

/// List-coloring certificate for a caterpillar: extracts the coefficient
/// of the monomial with every variable at exponent list_size - 1. A
/// nonzero value certifies that every assignment of lists of that size to
/// the caterpillar's interior edges admits an extension for every
/// conflict-free boundary coloring. Defined for caterpillars at maximum
/// degree 3 only.
inline CnCertificate cn_certificate(const ConfigSpec& spec) {
  spec.validate();
  if (spec.family != ConfigFamily::Caterpillar)
    throw std::invalid_argument("cn_certificate: defined for caterpillar configurations only");
  if (spec.max_degree != 3)
    throw std::invalid_argument("cn_certificate: defined for maximum degree 3 only");
  const FactorSystem fs = caterpillar_polynomial(spec.params[0]);
  CnCertificate cert;
  cert.list_size = spec.colors;
  Monomial target;
  for (int v = 0; v < fs.var_count(); ++v) target.mul(v, cert.list_size - 1);
  // Certificates need the top-degree form; off-degree targets give a zero
  // coefficient (the product is homogeneous in variables and constants),
  // and the capped expansion discovers that quickly.
  cert.coefficient = coefficient_of(fs, target);
  cert.ok = cert.coefficient != 0 && target.total_degree() == fs.degree();
  return cert;
}

}  // namespace scix
