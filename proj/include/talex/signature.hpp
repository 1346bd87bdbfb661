#pragma once

// Levine-Tristram signatures from a Seifert matrix.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"
#include "talex/roots.hpp"

namespace talex {

class SeifertMatrix {
 public:
  SeifertMatrix() = default;

  // Throws unless det(V - V^T) = +-1.
  explicit SeifertMatrix(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (const auto& r : rows_) {
      if (r.size() != n) throw ParseError("bad_seifert", "Seifert matrix must be square");
    }
    SquareMatrix<Rational> skew(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) skew(i, j) = Rational(rows_[i][j] - rows_[j][i]);
    }
    Rational d = det(skew);
    if (d != 1 && d != -1) throw MathError("bad_seifert", "det(V - V^T) = " + rational_string(d) + ", expected +-1");
  }

  std::size_t size() const { return rows_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  // det(V - t V^T), lowest exponent 0 and positive leading coefficient.
  QLaurent alexander() const {
    const std::size_t n = size();
    SquareMatrix<QLaurent> m(n, QLaurent{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        QLaurent e;
        e.add_term(0, Rational(rows_[i][j]));
        e.add_term(1, Rational(-rows_[j][i]));
        m(i, j) = e;
      }
    }
    QLaurent d = det(m).normalized();
    return sgn(d.leading()) < 0 ? -d : d;
  }

 private:
  std::vector<std::vector<long>> rows_;
};

inline SeifertMatrix parse_seifert(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw ParseError("bad_seifert", "non-integer Seifert entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return SeifertMatrix(std::move(rows));
}

struct SignatureValue {
  int value = 0;
  int nullity = 0;  // eigenvalues within 1e-9 of zero, excluded from value
};

inline SignatureValue lt_signature(const SeifertMatrix& v, Complex omega) {
  if (std::abs(std::abs(omega) - 1.0) > 1e-9) throw MathError("not_unit", "omega must lie on the unit circle");
  if (std::abs(omega - Complex(1.0)) <= 1e-12) return {};
  const auto n = static_cast<Eigen::Index>(v.size());
  if (n == 0) return {};
  Eigen::MatrixXcd h(n, n);
  const Complex p = 1.0 - omega, q = 1.0 - std::conj(omega);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      h(i, j) = p * static_cast<double>(v(ui, uj)) + q * static_cast<double>(v(uj, ui));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  SignatureValue out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double e = es.eigenvalues()(i);
    if (std::abs(e) <= 1e-9) {
      ++out.nullity;
    } else {
      out.value += e > 0 ? 1 : -1;
    }
  }
  return out;
}

inline double angle_of(Complex z) {
  double a = std::arg(z);
  return a < 0 ? a + 2 * std::numbers::pi : a;
}

struct CircleRoot {
  double angle = 0;  // in (0, 2 pi)
  int multiplicity = 1;
};

// Roots of delta on the unit circle, sorted by angle.
inline std::vector<CircleRoot> circle_roots(const QLaurent& delta, double radius_tol = 1e-7) {
  std::vector<CircleRoot> out;
  if (delta.is_zero()) throw MathError("zero_polynomial", "Alexander polynomial must be nonzero");
  if (delta.span() == 0) return out;
  for (const auto& r : complex_roots(delta)) {
    if (std::abs(std::abs(r.value) - 1.0) <= radius_tol) out.push_back({angle_of(r.value), r.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const CircleRoot& a, const CircleRoot& b) { return a.angle < b.angle; });
  return out;
}

// Half the smallest angular gap between consecutive circle roots, with
// omega = 1 (never a root of a knot's Alexander polynomial) as a boundary.
inline double one_sided_epsilon(const std::vector<CircleRoot>& roots) {
  double prev = 0, gap = 2 * std::numbers::pi;
  for (const auto& r : roots) {
    gap = std::min(gap, r.angle - prev);
    prev = r.angle;
  }
  gap = std::min(gap, 2 * std::numbers::pi - prev);
  return 0.5 * std::min(gap, std::numbers::pi);
}

namespace detail {

inline double circle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * std::numbers::pi);
  return std::min(d, 2 * std::numbers::pi - d);
}

inline int side_value(const SeifertMatrix& v, double angle) { return lt_signature(v, std::polar(1.0, angle)).value; }

}  // namespace detail

// (sigma(omega e^{i eps}) + sigma(omega e^{-i eps})) / 2. eps must not reach
// any circle root other than omega itself.
inline Rational averaged_signature(const SeifertMatrix& v, Complex omega, double epsilon) {
  if (std::abs(std::abs(omega) - 1.0) > 1e-9) throw MathError("not_unit", "omega must lie on the unit circle");
  if (!(epsilon > 0)) throw MathError("bad_epsilon", "epsilon must be positive");
  if (std::abs(omega - Complex(1.0)) <= 1e-12) return Rational(0);
  const double theta = angle_of(omega);
  for (const auto& r : circle_roots(v.alexander())) {
    const double d = detail::circle_distance(theta, r.angle);
    if (d > 1e-7 && d <= epsilon) throw MathError("epsilon_too_large", "epsilon reaches past a neighbouring root of the Alexander polynomial");
  }
  if (detail::circle_distance(theta, 0.0) <= epsilon) throw MathError("epsilon_too_large", "epsilon reaches past omega = 1");
  Rational avg(detail::side_value(v, theta + epsilon) + detail::side_value(v, theta - epsilon), 2);
  avg.canonicalize();
  return avg;
}

inline Rational averaged_signature(const SeifertMatrix& v, Complex omega) {
  return averaged_signature(v, omega, one_sided_epsilon(circle_roots(v.alexander())));
}

struct SignatureJump {
  double angle = 0;
  int jump = 0;  // sigma just after minus sigma just before, counterclockwise
  int multiplicity = 1;
};

inline void require_consistent(const SeifertMatrix& v, const QLaurent& delta) {
  if (delta.is_zero()) throw MathError("zero_polynomial", "Alexander polynomial must be nonzero");
  QLaurent d = delta.normalized();
  if (sgn(d.leading()) < 0) d = -d;
  if (!(d == v.alexander())) {
    throw MathError("inconsistent_seifert", "det(V - tV^T) = " + v.alexander().to_string() + " does not match " + d.to_string());
  }
}

// Nonzero jumps only.
inline std::vector<SignatureJump> signature_jumps(const SeifertMatrix& v, const QLaurent& delta) {
  require_consistent(v, delta);
  const auto roots = circle_roots(delta);
  const double eps = one_sided_epsilon(roots);
  std::vector<SignatureJump> out;
  for (const auto& r : roots) {
    const int jump = detail::side_value(v, r.angle + eps) - detail::side_value(v, r.angle - eps);
    if (r.multiplicity % 2 == 1 && jump == 0) {
      throw CertificationError("missing_jump", "odd-multiplicity circle root without a signature jump");
    }
    if (jump != 0) out.push_back({r.angle, jump, r.multiplicity});
  }
  return out;
}

inline bool is_identically_zero(const SeifertMatrix& v, const QLaurent& delta) {
  if (!signature_jumps(v, delta).empty()) return false;
  const auto roots = circle_roots(delta);
  std::vector<double> cuts{0.0};
  for (const auto& r : roots) cuts.push_back(r.angle);
  cuts.push_back(2 * std::numbers::pi);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    for (int s = 1; s <= 5; ++s) {
      if (detail::side_value(v, cuts[k] + (cuts[k + 1] - cuts[k]) * s / 6.0) != 0) return false;
    }
  }
  return true;
}

}  // namespace talex
