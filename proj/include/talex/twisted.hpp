#pragma once

// Wada's twisted Alexander invariant of a deficiency-one presentation and a
// 2-dimensional representation, its rank-one specialization (the Alexander
// polynomial), and the monicness / degree / genus read-outs.

#include <optional>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"
#include "talex/presentation.hpp"
#include "talex/sl2.hpp"
#include "talex/words.hpp"

namespace talex {

template <class F>
struct TwistedAlex {
  LaurentRational<F> value;
  // Set when the value is a Laurent polynomial; shifted to lowest exponent 0.
  std::optional<LaurentPoly<F>> polynomial;
  // Span of the polynomial; for a proper quotient, span(num) - span(den).
  int degree = 0;
  F leading{};
  bool monic = false;

  bool is_polynomial() const { return polynomial.has_value(); }
};

// Only t^k shifts are applied; the sign and leading coefficient are kept.
template <class F>
TwistedAlex<F> make_twisted(LaurentRational<F> value, const Tolerances& tol = {}) {
  TwistedAlex<F> ta;
  ta.value = std::move(value);
  if (ta.value.is_polynomial()) {
    LaurentPoly<F> p = ta.value.num * (field_from_int<F>(1) / ta.value.den.leading());
    p = p.normalized();
    ta.polynomial = p;
    if (p.is_zero()) {
      ta.degree = -1;
      ta.leading = field_from_int<F>(0);
      return ta;
    }
    ta.degree = p.span();
    ta.leading = p.leading();
  } else {
    ta.degree = ta.value.num.span() - ta.value.den.span();
    ta.leading = ta.value.num.leading() / ta.value.den.leading();
  }
  if constexpr (is_exact_field_v<F>) {
    ta.monic = ta.leading == 1;
  } else {
    ta.monic = std::abs(ta.leading - Complex(1.0)) <= tol.monic;
  }
  return ta;
}

// Fox matrix: entry (i, j) is d r_i / d x_j.
inline std::vector<std::vector<GroupRingElement>> fox_matrix(const Presentation& p) {
  std::vector<std::vector<GroupRingElement>> m;
  for (const auto& r : p.relators) {
    std::vector<GroupRingElement> row;
    for (int j = 0; j < p.generator_count(); ++j) row.push_back(fox_derivative(r, j));
    m.push_back(std::move(row));
  }
  return m;
}

// sum_w c_w t^{alpha(w)} rho(w)
template <class F>
Mat2<LaurentPoly<F>> phi_evaluate(const GroupRingElement& e, const Representation<F>& rho) {
  Mat2<LaurentPoly<F>> out;
  for (const auto& [w, c] : e.terms()) {
    const Mat2<F> m = image_of(rho, w);
    const int a = abelianization_exponent(w);
    const F coef = field_from_int<F>(static_cast<long>(c));
    out.a.add_term(a, coef * m.a);
    out.b.add_term(a, coef * m.b);
    out.c.add_term(a, coef * m.c);
    out.d.add_term(a, coef * m.d);
  }
  return out;
}

namespace detail {

inline QLaurent laurent_det(const SquareMatrix<QLaurent>& m, const Tolerances&) { return det(m); }
inline CLaurent laurent_det(const SquareMatrix<CLaurent>& m, const Tolerances& tol) { return det(m, tol.clean); }

inline LaurentRational<Rational> laurent_reduce(LaurentRational<Rational> r, const Tolerances&) { return reduce(std::move(r)); }
inline LaurentRational<Complex> laurent_reduce(LaurentRational<Complex> r, const Tolerances& tol) { return reduce(std::move(r), tol); }

inline void require_knot_like(const Presentation& p) {
  if (!p.deficiency_one) throw MathError("not_deficiency_one", "presentation must have deficiency one");
  if (!p.meridional) throw MathError("not_meridional", "every relator must have exponent sum zero");
}

}  // namespace detail

// det Phi(M_k) / det Phi(x_k - 1), reduced. k indexes the removed generator
// column; by default the last one.
template <class F>
TwistedAlex<F> wada_invariant(const Presentation& p, const Representation<F>& rho, std::optional<int> column = std::nullopt,
                              const Tolerances& tol = {}) {
  detail::require_knot_like(p);
  const int n = p.generator_count();
  const int k = column.value_or(n - 1);
  if (k < 0 || k >= n) throw MathError("bad_column", "removed column index out of range");
  if (rho.generator_count() != n) throw MathError("missing_generator", "representation does not cover every generator");

  const auto fox = fox_matrix(p);
  const std::size_t size = 2 * static_cast<std::size_t>(n - 1);
  SquareMatrix<LaurentPoly<F>> big(size, LaurentPoly<F>{});
  for (int i = 0; i < n - 1; ++i) {
    int col = 0;
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      auto block = phi_evaluate(fox[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], rho);
      const std::size_t r0 = 2 * static_cast<std::size_t>(i), c0 = 2 * static_cast<std::size_t>(col);
      big(r0, c0) = block.a;
      big(r0, c0 + 1) = block.b;
      big(r0 + 1, c0) = block.c;
      big(r0 + 1, c0 + 1) = block.d;
      ++col;
    }
  }
  LaurentPoly<F> numerator = detail::laurent_det(big, tol);

  // det(t rho(x_k) - I)
  const Mat2<F>& g = rho.images[static_cast<std::size_t>(k)];
  const LaurentPoly<F> one = LaurentPoly<F>::constant(1);
  const LaurentPoly<F> ta = LaurentPoly<F>::monomial(g.a, 1) - one, td = LaurentPoly<F>::monomial(g.d, 1) - one;
  LaurentPoly<F> denominator = ta * td - LaurentPoly<F>::monomial(g.b * g.c, 2);
  denominator = denominator.cleaned(tol.clean);
  if (denominator.is_zero()) throw MathError("vanishing_denominator", "det Phi(x_k - 1) vanishes identically");

  auto value = detail::laurent_reduce(LaurentRational<F>{numerator, denominator}, tol);
  auto result = make_twisted(std::move(value), tol);
  if constexpr (!is_exact_field_v<F>) {
    const bool unimodular = std::all_of(rho.images.begin(), rho.images.end(),
                                        [](const Mat2<F>& m) { return std::abs(m.det() - Complex(1.0)) <= 1e-8; });
    if (!result.is_polynomial() && unimodular && !is_abelian(rho)) {
      throw MathError("nonpolynomial", "twisted Alexander quotient is not a Laurent polynomial for a nonabelian SL(2) representation");
    }
  }
  return result;
}

// Alexander polynomial from the Fox matrix with every generator sent to t,
// normalized to lowest exponent 0 and positive leading coefficient.
inline QLaurent alexander(const Presentation& p) {
  detail::require_knot_like(p);
  const int n = p.generator_count();
  const auto fox = fox_matrix(p);
  SquareMatrix<QLaurent> m(static_cast<std::size_t>(n - 1), QLaurent{});
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      QLaurent entry;
      for (const auto& [w, c] : fox[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].terms()) {
        entry.add_term(abelianization_exponent(w), Rational(static_cast<long>(c)));
      }
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry;
    }
  }
  QLaurent d = det(m);
  if (d.is_zero()) throw MathError("zero_alexander", "Fox matrix minor vanishes; not a knot group presentation");
  d = d.normalized();
  if (sgn(d.leading()) < 0) d = -d;
  Rational at_one = d.evaluate<Rational>(Rational(1));
  if (at_one != 1 && at_one != -1) {
    throw MathError("not_knot_group", "Alexander polynomial has |Delta(1)| != 1");
  }
  return d;
}

// Smallest g with 4g - 2 >= deg. A degree-zero input gives 0 unless the knot
// is flagged nontrivial.
template <class F>
int genus_lower_bound(const TwistedAlex<F>& ta, bool nontrivial = false) {
  if (!ta.is_polynomial()) throw MathError("not_polynomial", "genus bound needs a polynomial invariant");
  if (ta.degree <= 0) return nontrivial ? 1 : 0;
  return (ta.degree + 2 + 3) / 4;
}

struct GenusDetermination {
  bool determines = false;
  bool degenerate = false;  // zero polynomial or non-polynomial input
};

template <class F>
GenusDetermination determines_genus(const TwistedAlex<F>& ta, int genus) {
  if (genus < 1) throw MathError("bad_genus", "genus must be at least 1");
  if (!ta.is_polynomial() || ta.polynomial->is_zero()) return {false, true};
  return {ta.degree == 4 * genus - 2, false};
}

template <class F>
struct CoefficientProfile {
  int genus = 0;
  std::vector<F> psi;  // psi_0 .. psi_{4g-2}

  double symmetry_defect() const {
    double m = 0;
    for (std::size_t k = 0; k < psi.size(); ++k) m = std::max(m, magnitude(psi[k] - psi[psi.size() - 1 - k]));
    return m;
  }
};

template <class F>
CoefficientProfile<F> coefficient_profile(const TwistedAlex<F>& ta, int genus) {
  if (genus < 1) throw MathError("bad_genus", "genus must be at least 1");
  if (!ta.is_polynomial()) throw MathError("not_polynomial", "coefficient profile needs a polynomial invariant");
  const int top = 4 * genus - 2;
  if (ta.degree > top) throw MathError("degree_exceeds_bound", "degree exceeds 4g-2; wrong genus input?");
  CoefficientProfile<F> prof;
  prof.genus = genus;
  // A polynomial of lower degree is centred on t^{2g-1}, the symmetry centre
  // of the full-degree case; an odd span has no centre and is padded on top.
  const int span = std::max(ta.degree, 0);
  const int offset = span % 2 == 0 ? (top - span) / 2 : 0;
  for (int j = 0; j <= top; ++j) prof.psi.push_back(ta.polynomial->coeff(j - offset));
  return prof;
}

template <class F>
CoefficientProfile<F> coefficient_profile(const Presentation& p, const Representation<F>& rho, int genus,
                                          const Tolerances& tol = {}) {
  return coefficient_profile(wada_invariant(p, rho, std::nullopt, tol), genus);
}

}  // namespace talex
