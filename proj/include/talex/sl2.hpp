#pragma once

// 2x2 matrices and representations of a presentation into SL(2).

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/presentation.hpp"
#include "talex/words.hpp"

namespace talex {

template <class T>
struct Mat2 {
  T a{}, b{}, c{}, d{};  // [[a, b], [c, d]]

  static Mat2 identity() { return {field_from_int<T>(1), field_from_int<T>(0), field_from_int<T>(0), field_from_int<T>(1)}; }
  static Mat2 diagonal(const T& x, const T& y) { return {x, field_from_int<T>(0), field_from_int<T>(0), y}; }

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  Mat2 inverse() const {
    T dt = det();
    if (is_exact_zero(dt)) throw MathError("singular_matrix", "matrix is not invertible");
    return Mat2{d / dt, -b / dt, -c / dt, a / dt};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2 operator*(const T& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
};

using CMat2 = Mat2<Complex>;

// Spectral norm of a complex 2x2 matrix.
inline double operator_norm(const CMat2& m) {
  double fro2 = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
  double det = std::abs(m.det());
  double disc = std::max(0.0, fro2 * fro2 - 4.0 * det * det);
  return std::sqrt(0.5 * (fro2 + std::sqrt(disc)));
}

inline CMat2 to_complex(const Mat2<Rational>& m) { return {to_complex(m.a), to_complex(m.b), to_complex(m.c), to_complex(m.d)}; }
inline CMat2 to_complex(const CMat2& m) { return m; }

template <class F>
struct Representation {
  std::vector<Mat2<F>> images;  // one per generator
  double residual = 0;          // max over relators of ||rho(r) - I||
  double determinant_drift = 0; // max over generators of |det - 1|

  int generator_count() const { return static_cast<int>(images.size()); }
};

using CRepresentation = Representation<Complex>;

template <class F>
Mat2<F> image_of(const Representation<F>& rho, const FreeWord& w) {
  Mat2<F> m = Mat2<F>::identity();
  for (const auto& l : w.letters()) {
    if (l.gen >= rho.generator_count()) throw MathError("missing_generator", "representation has no image for generator " + std::to_string(l.gen));
    const Mat2<F>& g = rho.images[static_cast<std::size_t>(l.gen)];
    m = m * (l.exp > 0 ? g : g.inverse());
  }
  return m;
}

// Recomputes the relator residual and determinant drift against p.
template <class F>
Representation<F> measured(Representation<F> rho, const Presentation& p) {
  if (rho.generator_count() != p.generator_count()) {
    throw MathError("missing_generator", "representation and presentation disagree on generator count");
  }
  rho.residual = 0;
  rho.determinant_drift = 0;
  for (const auto& g : rho.images) rho.determinant_drift = std::max(rho.determinant_drift, std::abs(to_complex(g.det()) - Complex(1.0)));
  for (const auto& r : p.relators) {
    CMat2 dev = to_complex(image_of(rho, r)) - CMat2::identity();
    rho.residual = std::max(rho.residual, operator_norm(dev));
  }
  return rho;
}

template <class F>
bool is_valid(const Representation<F>& rho, double residual_bound = Tolerances{}.residual) {
  return rho.residual <= residual_bound && rho.determinant_drift <= 1e-9;
}

// Every generator goes to diag(lambda, 1/lambda).
template <class F>
Representation<F> abelian_rep(const Presentation& p, const F& lambda) {
  if (is_exact_zero(lambda)) throw MathError("zero_lambda", "abelian representation needs lambda != 0");
  if (!p.meridional) throw MathError("not_meridional", "abelian representation needs a meridional presentation");
  Representation<F> rho;
  const F one = field_from_int<F>(1);
  rho.images.assign(static_cast<std::size_t>(p.generator_count()), Mat2<F>::diagonal(lambda, one / lambda));
  return measured(std::move(rho), p);
}

// Trace coordinates keyed by the word's text form.
struct Character {
  std::map<std::string, Complex> traces;
};

template <class F>
Character character_of(const Representation<F>& rho, const std::vector<FreeWord>& words,
                       const std::vector<std::string>& names = {}) {
  Character ch;
  for (const auto& w : words) ch.traces[w.to_string(names)] = to_complex(image_of(rho, w).trace());
  return ch;
}

// Generators, and products of two distinct generators.
inline std::vector<FreeWord> standard_trace_words(int generators) {
  std::vector<FreeWord> out;
  for (int i = 0; i < generators; ++i) out.push_back(FreeWord::generator(i));
  for (int i = 0; i < generators; ++i) {
    for (int j = i + 1; j < generators; ++j) out.push_back(FreeWord::generator(i) * FreeWord::generator(j));
  }
  return out;
}

// Reducible iff every pairwise commutator has trace within tol of 2.
template <class F>
bool is_reducible(const Representation<F>& rho, double tol = 1e-6) {
  for (std::size_t i = 0; i < rho.images.size(); ++i) {
    for (std::size_t j = i + 1; j < rho.images.size(); ++j) {
      CMat2 x = to_complex(rho.images[i]), y = to_complex(rho.images[j]);
      Complex tr = (x * y * x.inverse() * y.inverse()).trace();
      if (std::abs(tr - Complex(2.0)) > tol) return false;
    }
  }
  return true;
}

template <class F>
bool is_abelian(const Representation<F>& rho, double tol = 1e-9) {
  for (std::size_t i = 0; i < rho.images.size(); ++i) {
    for (std::size_t j = i + 1; j < rho.images.size(); ++j) {
      CMat2 x = to_complex(rho.images[i]), y = to_complex(rho.images[j]);
      double scale = std::max(1.0, operator_norm(x) * operator_norm(y));
      if (operator_norm(x * y - y * x) > tol * scale) return false;
    }
  }
  return true;
}

template <class F>
Representation<F> conjugated(const Representation<F>& rho, const Mat2<F>& g) {
  Representation<F> out = rho;
  Mat2<F> gi = g.inverse();
  for (auto& m : out.images) m = g * m * gi;
  return out;
}

}  // namespace talex
