#pragma once

// Coefficient fields. Two are supported: exact rationals (GMP) and complex
// doubles. Generic code dispatches through the overloads below.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <type_traits>

#include "talex/errors.hpp"

namespace talex {

using Rational = mpq_class;
using Complex = std::complex<double>;

template <class F>
inline constexpr bool is_exact_field_v = std::is_same_v<F, Rational>;

// Default numerical tolerances shared across modules.
struct Tolerances {
  double clean = 1e-10;      // relative coefficient cleanup
  double cluster = 1e-8;     // root merging radius
  double residual = 1e-8;    // representation acceptance bound
  double remainder = 1e-6;   // relative remainder allowed when dividing numerically
  double monic = 1e-6;       // |leading - 1| bound for the monic flag
};

inline bool is_exact_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_exact_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

inline bool is_one(const Rational& x) { return x == 1; }

inline double magnitude(const Rational& x) { return std::abs(x.get_d()); }
inline double magnitude(const Complex& x) { return std::abs(x); }

inline Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }

template <class F>
F field_from_int(long v) {
  if constexpr (is_exact_field_v<F>) {
    return Rational(v);
  } else {
    return F(static_cast<double>(v), 0.0);
  }
}

inline Rational canonical(Rational x) {
  x.canonicalize();
  return x;
}

// "num/den", always with an explicit denominator.
inline std::string rational_string(const Rational& q) {
  Rational c = canonical(q);
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw ParseError("bad_rational", "not a rational number: " + text);
  }
  if (q.get_den() == 0) throw ParseError("bad_rational", "zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string coeff_string(const Rational& q) {
  Rational c = canonical(q);
  return c.get_str();
}

inline std::string coeff_string(const Complex& z) {
  std::ostringstream os;
  os.precision(12);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  }
  return os.str();
}

}  // namespace talex
