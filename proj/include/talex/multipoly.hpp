#pragma once

// Sparse multivariate polynomials with rational coefficients over an ordered
// list of named variables. Exponents may be negative (localization at a
// variable); division and resultants require ordinary polynomials.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"

namespace talex {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  // std::vector's operator< is lexicographic, first variable most significant;
  // the largest key is the leading term.
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name, int power = 1) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = power;
    p.add_term(e, Rational(1));
    return p;
  }
  // Builds a univariate polynomial in `name` from a Laurent polynomial.
  static MultiPoly from_laurent(std::vector<std::string> vars, const std::string& name, const QLaurent& q) {
    MultiPoly p(std::move(vars));
    std::size_t k = p.index_of(name);
    for (const auto& [e, c] : q.terms()) {
      Exponents ex(p.vars_.size(), 0);
      ex[k] = e;
      p.add_term(ex, c);
    }
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw MathError("unknown_variable", "variable '" + name + "' not in ring");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw MathError("arity", "exponent vector length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  bool is_polynomial() const {
    for (const auto& [e, c] : terms_) {
      for (int x : e) {
        if (x < 0) return false;
      }
    }
    return true;
  }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](int x) { return x == 0; }));
  }
  Rational constant_value() const {
    if (!is_constant()) throw MathError("not_constant", "polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  // Variables that actually occur.
  std::vector<std::string> support_vars() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first[k] != 0; });
      if (used) out.push_back(vars_[k]);
    }
    return out;
  }

  int degree_in(const std::string& name) const {
    std::size_t k = index_of(name);
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      d = first ? e[k] : std::max(d, e[k]);
      first = false;
    }
    return d;
  }
  int min_degree_in(const std::string& name) const {
    std::size_t k = index_of(name);
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      d = first ? e[k] : std::min(d, e[k]);
      first = false;
    }
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  // Coefficients as polynomials in the other variables, indexed by the power
  // of `name` (the variable stays in the ring with exponent zero).
  std::vector<MultiPoly> coefficients_in(const std::string& name) const {
    std::size_t k = index_of(name);
    if (min_degree_in(name) < 0) throw MathError("not_polynomial", "negative power of " + name);
    std::vector<MultiPoly> out(static_cast<std::size_t>(degree_in(name)) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[k] = 0;
      out[static_cast<std::size_t>(e[k])].add_term(rest, c);
    }
    return out;
  }

  std::pair<Exponents, Rational> leading_term() const {
    if (terms_.empty()) throw MathError("zero_polynomial", "leading term of zero");
    return *terms_.rbegin();
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    MultiPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly result = constant(vars_, Rational(1)), base = *this;
    while (n) {
      if (n & 1U) result *= base;
      base *= base;
      n >>= 1U;
    }
    return result;
  }

  // Same polynomial viewed in a ring with a different variable list. Every
  // occurring variable must be present in `vars`.
  MultiPoly in_ring(const std::vector<std::string>& vars) const {
    MultiPoly out(vars);
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto it = std::find(vars.begin(), vars.end(), vars_[k]);
      bool used = std::any_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first[k] != 0; });
      if (it == vars.end()) {
        if (used) throw MathError("unknown_variable", "variable '" + vars_[k] + "' missing from target ring");
        map[k] = vars.size();
      } else {
        map[k] = static_cast<std::size_t>(it - vars.begin());
      }
    }
    for (const auto& [e, c] : terms_) {
      Exponents ne(vars.size(), 0);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (map[k] < vars.size()) ne[map[k]] = e[k];
      }
      out.add_term(ne, c);
    }
    return out;
  }

  // Exchanges the roles of two variables.
  MultiPoly swapped(const std::string& a, const std::string& b) const {
    std::size_t i = index_of(a), j = index_of(b);
    MultiPoly out(vars_);
    for (const auto& [exps, c] : terms_) {
      Exponents e = exps;
      std::swap(e[i], e[j]);
      out.add_term(e, c);
    }
    return out;
  }

  // Multiplies by var^power.
  MultiPoly times_monomial(const std::string& name, int power) const {
    std::size_t k = index_of(name);
    MultiPoly out(vars_);
    for (const auto& [exps, c] : terms_) {
      Exponents e = exps;
      e[k] += power;
      out.add_term(e, c);
    }
    return out;
  }

  // Replaces each variable in `images` by the given polynomial (all images
  // live in `target`); unmapped variables are carried over by name.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images, const std::vector<std::string>& target) const {
    std::vector<std::optional<MultiPoly>> img(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto it = images.find(vars_[k]);
      if (it != images.end()) {
        img[k] = it->second.in_ring(target);
      } else if (std::find(target.begin(), target.end(), vars_[k]) != target.end()) {
        img[k] = variable(target, vars_[k]);
      }
    }
    // Cache powers per variable.
    std::vector<std::map<int, MultiPoly>> powers(vars_.size());
    auto power_of = [&](std::size_t k, int n) -> const MultiPoly& {
      auto it = powers[k].find(n);
      if (it != powers[k].end()) return it->second;
      if (!img[k]) throw MathError("unknown_variable", "no image for variable '" + vars_[k] + "'");
      if (n < 0) {
        if (img[k]->size() != 1) throw MathError("not_polynomial", "negative power of a non-monomial image");
        auto [le, lc] = img[k]->leading_term();
        MultiPoly inv(target);
        for (int& x : le) x = -x;
        inv.add_term(le, Rational(1) / lc);
        return powers[k].emplace(n, inv.pow(static_cast<unsigned>(-n))).first->second;
      }
      return powers[k].emplace(n, img[k]->pow(static_cast<unsigned>(n))).first->second;
    };
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(target, c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] != 0) term *= power_of(k, e[k]);
      }
      out += term;
    }
    return out;
  }

  template <class X>
  X evaluate(const std::map<std::string, X>& values) const {
    std::vector<X> v(vars_.size(), X(0));
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto it = values.find(vars_[k]);
      if (it != values.end()) v[k] = it->second;
    }
    X acc(0);
    for (const auto& [e, c] : terms_) {
      X term = convert<X>(c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        X base = e[k] > 0 ? v[k] : X(1) / v[k];
        for (int i = 0; i < std::abs(e[k]); ++i) term *= base;
      }
      acc += term;
    }
    return acc;
  }

  // Univariate complex polynomial in `name` after numerically evaluating the
  // remaining variables.
  CLaurent to_univariate(const std::string& name, const std::map<std::string, Complex>& values) const {
    std::size_t k = index_of(name);
    CLaurent out;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[k] = 0;
      MultiPoly mono(vars_);
      mono.add_term(rest, c);
      out.add_term(e[k], mono.evaluate<Complex>(values));
    }
    return out;
  }

  // Univariate exact polynomial; fails if other variables occur.
  QLaurent to_laurent(const std::string& name) const {
    std::size_t k = index_of(name);
    QLaurent out;
    for (const auto& [e, c] : terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j != k && e[j] != 0) throw MathError("not_univariate", "polynomial involves " + vars_[j]);
      }
      out.add_term(e[k], c);
    }
    return out;
  }

  // Primitive integer-coefficient representative with positive leading
  // coefficient (lexicographic order).
  MultiPoly primitive() const {
    if (terms_.empty()) return *this;
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
      Rational q = canonical(c);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    Rational scale(l, g);
    if (sgn(leading_term().second) < 0) scale = -scale;
    return *this * canonical(scale);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational q = canonical(c);
      bool negative = sgn(q) < 0;
      if (negative) q = -q;
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (e[k] != 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) {
        os << q.get_str();
      } else if (q == 1) {
        os << mono;
      } else {
        os << q.get_str() << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  template <class X>
  static X convert(const Rational& c) {
    if constexpr (std::is_same_v<X, Rational>) {
      return c;
    } else if constexpr (std::is_same_v<X, Complex>) {
      return to_complex(c);
    } else {
      return X(c.get_d());
    }
  }

  void check_ring(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw MathError("ring_mismatch", "polynomials live in different rings");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

// p = q * s exactly, by leading-term division in lexicographic order.
// Returns nullopt when q does not divide p.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw MathError("division_by_zero", "multivariate division by zero");
  if (p.vars() != q.vars()) throw MathError("ring_mismatch", "polynomials live in different rings");
  if (!p.is_polynomial() || !q.is_polynomial()) {
    throw MathError("not_polynomial", "exact_divide requires nonnegative exponents");
  }
  MultiPoly quotient(p.vars()), rest = p;
  const auto [qe, qc] = q.leading_term();
  while (!rest.is_zero()) {
    auto [re, rc] = rest.leading_term();
    MultiPoly::Exponents me(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) {
      me[k] = re[k] - qe[k];
      if (me[k] < 0) return std::nullopt;
    }
    MultiPoly mono(p.vars());
    mono.add_term(me, rc / qc);
    quotient += mono;
    rest -= mono * q;
  }
  return quotient;
}

// If a = c * b for a nonzero rational c, returns c.
inline std::optional<Rational> scalar_ratio(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  auto q1 = exact_divide(a, b);
  auto q2 = exact_divide(b, a);
  if (!q1 || !q2 || !q1->is_constant() || !q2->is_constant()) return std::nullopt;
  Rational c = q1->constant_value();
  if (c * q2->constant_value() != 1) return std::nullopt;
  return canonical(c);
}

}  // namespace talex
