#pragma once

// Closed-form facts about reducible representations: the Burde-de Rham
// criterion, the twisted invariant of a diagonal representation, and the
// Alexander polynomial of a satellite.

#include <cmath>

#include "talex/field.hpp"
#include "talex/laurent.hpp"
#include "talex/twisted.hpp"

namespace talex {

// A reducible nonabelian representation with the character of diag(l, 1/l)
// exists iff l^2 is a root of Delta. Numerically: |Delta(l^2)| is small
// compared with sum |c_i| |l^2|^i.
inline bool burde_derham_check(const QLaurent& delta, Complex lambda, double tol = 1e-9) {
  if (delta.is_zero()) throw MathError("zero_polynomial", "Alexander polynomial must be nonzero");
  const Complex z = lambda * lambda;
  double scale = 0;
  for (const auto& [e, c] : delta.terms()) scale += magnitude(c) * std::pow(std::abs(z), e);
  return std::abs(delta.evaluate_complex(z)) <= tol * scale;
}

// Delta(l t) Delta(l^-1 t) / ((t - l)(t - l^-1)), reduced.
template <class F>
TwistedAlex<F> reducible_formula(const QLaurent& delta, const F& lambda, const Tolerances& tol = {}) {
  if (is_exact_zero(lambda)) throw MathError("zero_lambda", "lambda must be nonzero");
  if (delta.is_zero()) throw MathError("zero_polynomial", "Alexander polynomial must be nonzero");
  LaurentPoly<F> d;
  if constexpr (is_exact_field_v<F>) {
    d = delta;
  } else {
    d = to_complex_poly(delta);
  }
  const F one = field_from_int<F>(1);
  const F inv = one / lambda;
  LaurentPoly<F> num = d.scaled_variable(lambda) * d.scaled_variable(inv);
  LaurentPoly<F> den = LaurentPoly<F>::from_coefficients({one, -(lambda + inv), one});
  if constexpr (is_exact_field_v<F>) {
    return make_twisted(reduce(LaurentRational<F>{num, den}), tol);
  } else {
    return make_twisted(reduce(LaurentRational<F>{num, den}, tol), tol);
  }
}

// Lowest exponent 0, positive leading coefficient.
inline QLaurent normalize_alexander(const QLaurent& p) {
  if (p.is_zero()) return p;
  QLaurent q = p.normalized();
  return sgn(q.leading()) < 0 ? -q : q;
}

// Delta_pattern(t) * Delta_companion(t^n). For winding number zero the
// companion factor is Delta(1) = +-1, taken as 1.
inline QLaurent satellite_alexander(const QLaurent& pattern, const QLaurent& companion, int winding) {
  if (winding < 0) throw MathError("bad_winding", "winding number must be nonnegative");
  if (winding == 0) return normalize_alexander(pattern);
  return normalize_alexander(pattern * companion.power_variable(winding));
}

}  // namespace talex
