#pragma once

// Square matrices over the library's coefficient domains and their
// determinants: fraction-free (Bareiss) elimination for exact rings, partial
// pivoting for complex entries, and evaluation/interpolation at roots of unity
// for matrices of complex Laurent polynomials.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"
#include "talex/multipoly.hpp"

namespace talex {

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, const T& fill) : n_(n), a_(n * n, fill) {}
  explicit SquareMatrix(std::vector<std::vector<T>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (auto& r : rows) {
      if (r.size() != n_) throw MathError("not_square", "matrix rows have inconsistent length");
      for (auto& x : r) a_.push_back(std::move(x));
    }
  }

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    if (x.n_ != y.n_) throw MathError("dimension", "matrix dimension mismatch");
    SquareMatrix out(x.n_, x(0, 0) - x(0, 0));
    for (std::size_t i = 0; i < x.n_; ++i) {
      for (std::size_t j = 0; j < x.n_; ++j) {
        for (std::size_t k = 0; k < x.n_; ++k) out(i, j) += x(i, k) * y(k, j);
      }
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

// Ring hooks used by the fraction-free elimination.
inline bool ring_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const QLaurent& x) { return x.is_zero(); }
inline bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }

inline Rational ring_one_like(const Rational&) { return Rational(1); }
inline QLaurent ring_one_like(const QLaurent&) { return QLaurent::constant(1); }
inline MultiPoly ring_one_like(const MultiPoly& x) { return MultiPoly::constant(x.vars(), Rational(1)); }

inline Rational ring_zero_like(const Rational&) { return Rational(0); }
inline QLaurent ring_zero_like(const QLaurent&) { return QLaurent{}; }
inline MultiPoly ring_zero_like(const MultiPoly& x) { return MultiPoly(x.vars()); }

inline Rational ring_exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline QLaurent ring_exact_quotient(const QLaurent& a, const QLaurent& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw MathError("inexact_division", "Bareiss step is not an exact division");
  return *q;
}
inline MultiPoly ring_exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw MathError("inexact_division", "Bareiss step is not an exact division");
  return *q;
}

// Fraction-free Gaussian elimination; every division is exact.
template <class T>
T det_bareiss(SquareMatrix<T> m) {
  const std::size_t n = m.dim();
  if (n == 0) throw MathError("empty_matrix", "determinant of a 0x0 matrix requires a ring hint");
  T prev = ring_one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && ring_is_zero(m(p, k))) ++p;
      if (p == n) return ring_zero_like(m(0, 0));
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = ring_exact_quotient(num, prev);
      }
      m(i, k) = ring_zero_like(m(0, 0));
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

inline Rational det(const SquareMatrix<Rational>& m) {
  return m.dim() == 0 ? Rational(1) : det_bareiss(m);
}
inline QLaurent det(const SquareMatrix<QLaurent>& m) {
  return m.dim() == 0 ? QLaurent::constant(1) : det_bareiss(m);
}
inline MultiPoly det(const SquareMatrix<MultiPoly>& m) {
  if (m.dim() == 0) throw MathError("empty_matrix", "0x0 polynomial matrix has no ring");
  return det_bareiss(m);
}

inline Complex det(const SquareMatrix<Complex>& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  if (n == 0) return {1.0, 0.0};
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return a.partialPivLu().determinant();
}

// The determinant is a Laurent polynomial whose support is bounded by the
// per-row exponent ranges. It is sampled at enough roots of unity on the unit
// circle, where partial-pivot elimination is well conditioned, and recovered
// by an inverse discrete Fourier transform.
inline CLaurent det(const SquareMatrix<CLaurent>& m, double clean_eps = Tolerances{}.clean) {
  const std::size_t n = m.dim();
  if (n == 0) return CLaurent::constant(1);
  int lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<int> rlo, rhi;
    for (std::size_t j = 0; j < n; ++j) {
      const CLaurent& e = m(i, j);
      if (e.is_zero()) continue;
      rlo = rlo ? std::min(*rlo, e.min_exp()) : e.min_exp();
      rhi = rhi ? std::max(*rhi, e.max_exp()) : e.max_exp();
    }
    if (!rlo) return CLaurent{};
    lo += *rlo;
    hi += *rhi;
  }
  const int samples = hi - lo + 1;
  std::vector<Complex> values(static_cast<std::size_t>(samples));
  SquareMatrix<Complex> at(n, Complex{});
  for (int s = 0; s < samples; ++s) {
    double angle = 2.0 * std::numbers::pi * s / samples;
    Complex w = std::polar(1.0, angle);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).evaluate_complex(w);
    }
    // Remove the t^lo offset so the sampled function is an ordinary polynomial.
    values[static_cast<std::size_t>(s)] = det(at) * std::polar(1.0, -angle * lo);
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    Complex acc{};
    for (int s = 0; s < samples; ++s) {
      acc += values[static_cast<std::size_t>(s)] * std::polar(1.0, -2.0 * std::numbers::pi * j * s / samples);
    }
    coeffs[static_cast<std::size_t>(j)] = acc / static_cast<double>(samples);
  }
  return CLaurent::from_coefficients(coeffs, lo).cleaned(clean_eps);
}

}  // namespace talex
