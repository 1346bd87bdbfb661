#pragma once

// Laurent polynomials in one variable t over a coefficient field, and the
// quotients of two of them.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"

namespace talex {

template <class F>
class LaurentPoly {
 public:
  using Coeff = F;
  using Terms = std::map<int, F>;

  LaurentPoly() = default;
  explicit LaurentPoly(const F& c) { add_term(0, c); }

  static LaurentPoly constant(long c) { return LaurentPoly(field_from_int<F>(c)); }
  static LaurentPoly monomial(const F& c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }
  static LaurentPoly t() { return monomial(field_from_int<F>(1), 1); }

  // Coefficients listed from exponent `low` upwards.
  static LaurentPoly from_coefficients(const std::vector<F>& coeffs, int low = 0) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(low + static_cast<int>(i), coeffs[i]);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int min_exp() const {
    require_nonzero("min_exp");
    return terms_.begin()->first;
  }
  int max_exp() const {
    require_nonzero("max_exp");
    return terms_.rbegin()->first;
  }
  // Width of the support: highest minus lowest exponent.
  int span() const { return max_exp() - min_exp(); }

  F coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_from_int<F>(0) : it->second;
  }
  F leading() const {
    require_nonzero("leading");
    return terms_.rbegin()->second;
  }
  F trailing() const {
    require_nonzero("trailing");
    return terms_.begin()->second;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_polynomial() const { return terms_.empty() || min_exp() >= 0; }

  void add_term(int e, const F& c) {
    if (is_exact_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_exact_zero(it->second)) terms_.erase(it);
    }
  }

  void erase_term(int e) { terms_.erase(e); }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const F& s) {
    if (is_exact_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (is_exact_zero(it->second)) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(LaurentPoly a, const F& s) { return a *= s; }
  friend LaurentPoly operator*(const F& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result = constant(1), base = *this;
    while (n) {
      if (n & 1U) result *= base;
      base *= base;
      n >>= 1U;
    }
    return result;
  }

  // Multiplication by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  // p(c t)
  LaurentPoly scaled_variable(const F& c) const {
    LaurentPoly out;
    for (const auto& [e, coef] : terms_) out.add_term(e, coef * int_power(c, e));
    return out;
  }

  // p(t^n); n = 0 collapses to the constant p(1).
  LaurentPoly power_variable(int n) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e * n, c);
    return out;
  }

  // p(1/t)
  LaurentPoly reflected() const { return power_variable(-1); }

  template <class X>
  X evaluate(const X& x) const {
    X acc{};
    for (const auto& [e, c] : terms_) acc += coeff_as<X>(c) * int_power(x, e);
    return acc;
  }

  Complex evaluate_complex(const Complex& z) const { return evaluate<Complex>(z); }

  LaurentPoly derivative() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
      if (e != 0) out.add_term(e - 1, c * field_from_int<F>(e));
    }
    return out;
  }

  // Shift so the lowest exponent is 0; returns the shift applied.
  std::pair<LaurentPoly, int> normalized_shift() const {
    if (is_zero()) return {*this, 0};
    int k = -min_exp();
    return {shifted(k), k};
  }
  LaurentPoly normalized() const { return normalized_shift().first; }

  double max_norm() const {
    double m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, magnitude(c));
    return m;
  }

  // Drops coefficients below eps times the largest one (floating fields).
  LaurentPoly cleaned(double eps) const {
    if constexpr (is_exact_field_v<F>) {
      return *this;
    } else {
      double bound = eps * max_norm();
      LaurentPoly out;
      for (const auto& [e, c] : terms_) {
        if (magnitude(c) <= bound) continue;
        F k = c;
        if constexpr (std::is_same_v<F, Complex>) {
          if (std::abs(k.real()) <= bound) k.real(0.0);
          if (std::abs(k.imag()) <= bound) k.imag(0.0);
        }
        out.terms_.emplace(e, k);
      }
      return out;
    }
  }

  std::string to_string(const std::string& var = "t") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = coeff_string(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << cs;
        continue;
      }
      if (cs != "1") os << cs << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  template <class X>
  static X int_power(const X& x, int e) {
    if (e < 0) return X(field_from_int<X>(1)) / int_power(x, -e);
    X r = field_from_int<X>(1), b = x;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
      if (n & 1U) r *= b;
      b *= b;
      n >>= 1U;
    }
    return r;
  }

  template <class X>
  static X coeff_as(const F& c) {
    if constexpr (std::is_same_v<X, F>) {
      return c;
    } else {
      return to_complex(c);
    }
  }

  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw MathError("zero_polynomial", std::string(what) + " of the zero polynomial");
  }

  Terms terms_;
};

using QLaurent = LaurentPoly<Rational>;
using CLaurent = LaurentPoly<Complex>;

inline CLaurent to_complex_poly(const QLaurent& p) {
  CLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_complex(c));
  return out;
}
inline CLaurent to_complex_poly(const CLaurent& p) { return p; }

// Long division of ordinary polynomials (nonnegative exponents).
template <class F>
std::pair<LaurentPoly<F>, LaurentPoly<F>> divmod(const LaurentPoly<F>& a, const LaurentPoly<F>& b) {
  if (b.is_zero()) throw MathError("division_by_zero", "polynomial division by zero");
  if (!a.is_polynomial() || !b.is_polynomial()) {
    throw MathError("not_polynomial", "divmod requires nonnegative exponents");
  }
  LaurentPoly<F> q, r = a;
  const int db = b.max_exp();
  const F lb = b.leading();
  while (!r.is_zero() && r.max_exp() >= db) {
    int shift = r.max_exp() - db;
    F c = r.leading() / lb;
    LaurentPoly<F> term = LaurentPoly<F>::monomial(c, shift);
    q += term;
    r -= term * b;
    if constexpr (!is_exact_field_v<F>) {
      // The leading term cancels only approximately in floating point.
      r.erase_term(shift + db);
    }
  }
  return {q, r};
}

// Exact quotient a / b in the Laurent ring, if it exists (exact fields).
inline std::optional<QLaurent> exact_quotient(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw MathError("division_by_zero", "Laurent division by zero");
  if (a.is_zero()) return QLaurent{};
  auto [an, ashift] = a.normalized_shift();
  auto [bn, bshift] = b.normalized_shift();
  auto [q, r] = divmod(an, bn);
  if (!r.is_zero()) return std::nullopt;
  return q.shifted(bshift - ashift);
}

template <class F>
LaurentPoly<F> make_monic(const LaurentPoly<F>& p) {
  if (p.is_zero()) return p;
  return p * (field_from_int<F>(1) / p.leading());
}

// Monic gcd of two polynomials over Q (Laurent inputs are shifted first).
inline QLaurent gcd(const QLaurent& a, const QLaurent& b) {
  QLaurent x = a.normalized(), y = b.normalized();
  while (!y.is_zero()) {
    QLaurent r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

// Square-free decomposition (Yun). Returns pairs (factor, multiplicity) with
// monic, pairwise coprime, nonconstant factors whose product (with powers) is
// the monic normalization of p.
inline std::vector<std::pair<QLaurent, int>> squarefree_decomposition(const QLaurent& p) {
  if (p.is_zero()) throw MathError("zero_polynomial", "square-free decomposition of zero");
  QLaurent f = make_monic(p.normalized());
  std::vector<std::pair<QLaurent, int>> out;
  if (f.max_exp() == 0) return out;
  QLaurent fp = f.derivative();
  QLaurent a = gcd(f, fp);
  QLaurent b = *exact_quotient(f, a);
  QLaurent c = *exact_quotient(fp, a);
  QLaurent d = c - b.derivative();
  int i = 1;
  while (b.max_exp() > 0) {
    QLaurent g = gcd(b, d);
    if (g.max_exp() > 0) out.emplace_back(g, i);
    b = *exact_quotient(b, g);
    c = *exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// A quotient num/den. After reduce(): den is an ordinary monic polynomial
// with nonzero constant term; exact-field instances are in lowest terms.
template <class F>
struct LaurentRational {
  LaurentPoly<F> num;
  LaurentPoly<F> den = LaurentPoly<F>::constant(1);

  bool is_polynomial() const { return den.is_constant(); }

  static LaurentRational from_polynomial(LaurentPoly<F> p) { return {std::move(p), LaurentPoly<F>::constant(1)}; }
};

inline LaurentRational<Rational> reduce(LaurentRational<Rational> r) {
  if (r.den.is_zero()) throw MathError("zero_denominator", "rational function with zero denominator");
  if (r.num.is_zero()) return {QLaurent{}, QLaurent::constant(1)};
  auto [dn, dshift] = r.den.normalized_shift();
  QLaurent num = r.num.shifted(dshift);
  auto [nn, nshift] = num.normalized_shift();
  QLaurent g = gcd(nn, dn);
  QLaurent n2 = *exact_quotient(nn, g);
  QLaurent d2 = *exact_quotient(dn, g);
  Rational lead = d2.leading();
  return {(n2 * (Rational(1) / lead)).shifted(-nshift), d2 * (Rational(1) / lead)};
}

// Numerical reduction: den is normalized to monic, and if num is divisible by
// den up to a relative remainder `remainder_tol` the quotient is returned with
// den = 1.
inline LaurentRational<Complex> reduce(LaurentRational<Complex> r, const Tolerances& tol = {}) {
  r.num = r.num.cleaned(tol.clean);
  r.den = r.den.cleaned(tol.clean);
  if (r.den.is_zero()) throw MathError("zero_denominator", "rational function with zero denominator");
  if (r.num.is_zero()) return {CLaurent{}, CLaurent::constant(1)};
  auto [dn, dshift] = r.den.normalized_shift();
  Complex lead = dn.leading();
  dn = dn * (Complex(1.0) / lead);
  CLaurent num = r.num.shifted(dshift) * (Complex(1.0) / lead);
  if (dn.is_constant()) return {num.cleaned(tol.clean), dn};
  auto [nn, nshift] = num.normalized_shift();
  auto [q, rem] = divmod(nn, dn);
  if (rem.max_norm() <= tol.remainder * nn.max_norm()) {
    return {q.cleaned(tol.clean).shifted(-nshift), CLaurent::constant(1)};
  }
  return {num, dn};
}

}  // namespace talex
