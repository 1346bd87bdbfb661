#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"

namespace talex {

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootOptions {
  double tol = 1e-10;          // backward-error bound |p(r)| <= tol * sum |c_i| |r|^i
  double cluster = 1e-8;       // merge radius
  int max_iterations = 2000;
};

namespace detail {

inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline double horner_abs(const std::vector<Complex>& c, double r) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

// Aberth-Ehrlich simultaneous iteration on an ordinary polynomial with
// nonzero constant term; coefficients are listed lowest degree first.
inline std::vector<Complex> aberth(const std::vector<Complex>& c, int max_iterations) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Complex> d(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) d[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(k)] * static_cast<double>(k);

  // Initial points on a circle whose radius is the geometric mean of the root moduli.
  double radius = std::pow(std::abs(c.front() / c.back()), 1.0 / n);
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);

  for (int iter = 0; iter < max_iterations; ++iter) {
    double biggest = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex pv = horner(c, z[k]);
      if (pv == Complex{}) continue;
      Complex ratio = pv / horner(d, z[k]);
      Complex repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[k] -= step;
      biggest = std::max(biggest, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (biggest < 1e-16) break;
  }
  return z;
}

inline std::vector<Root> cluster_roots(const std::vector<Complex>& raw, int multiplicity, double radius) {
  std::vector<int> parent(raw.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    return i;
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (std::abs(raw[i] - raw[j]) <= radius) parent[static_cast<std::size_t>(find(static_cast<int>(j)))] = find(static_cast<int>(i));
    }
  }
  std::vector<Root> out;
  std::vector<int> slot(raw.size(), -1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.push_back({Complex{}, 0});
    }
    Root& root = out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])];
    root.value += raw[i];
    root.multiplicity += multiplicity;
  }
  for (auto& root : out) root.value /= static_cast<double>(root.multiplicity / multiplicity);
  return out;
}

inline void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
}

inline std::vector<Root> merge_clusters(std::vector<Root> roots, double radius) {
  std::vector<Root> out;
  for (const auto& r : roots) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Root& o) { return std::abs(o.value - r.value) <= radius; });
    if (it == out.end()) {
      out.push_back(r);
    } else {
      it->multiplicity += r.multiplicity;
    }
  }
  return out;
}

inline std::vector<Root> roots_of_polynomial(const CLaurent& poly, int multiplicity, const RootOptions& opt) {
  std::vector<Root> out;
  if (poly.is_zero()) throw MathError("zero_polynomial", "roots of the zero polynomial");
  int zeros = std::max(0, poly.min_exp());
  if (zeros > 0) out.push_back({Complex{}, zeros * multiplicity});
  CLaurent p = poly.normalized();
  if (p.max_exp() == 0) return out;
  std::vector<Complex> c(static_cast<std::size_t>(p.max_exp()) + 1);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
  auto raw = aberth(c, opt.max_iterations);
  for (const auto& root : cluster_roots(raw, multiplicity, opt.cluster)) {
    double scale = horner_abs(c, std::abs(root.value));
    double residual = std::abs(horner(c, root.value));
    // A merged cluster is represented by its centroid, which is slightly less
    // accurate than an isolated simple root.
    int m = root.multiplicity / multiplicity;
    double bound = opt.tol * scale * (m == 1 ? 1.0 : 1e3);
    if (!(residual <= bound)) {
      throw SolverError("root_nonconvergence", "root finder did not converge (residual " + std::to_string(residual) +
                                                   ", bound " + std::to_string(bound) + ")");
    }
    out.push_back(root);
  }
  return out;
}

}  // namespace detail

// All complex roots with multiplicity of a univariate polynomial with
// complex coefficients. Nearby roots are merged with summed multiplicity.
inline std::vector<Root> complex_roots(const CLaurent& p, const RootOptions& opt = {}) {
  if (p.is_zero() || p.span() + std::max(0, p.min_exp()) < 1) {
    throw MathError("degree_zero", "complex_roots needs degree >= 1");
  }
  auto roots = detail::merge_clusters(detail::roots_of_polynomial(p, 1, opt), opt.cluster);
  detail::sort_roots(roots);
  return roots;
}

// Exact polynomials are split into square-free factors first, so repeated
// roots are found as simple roots of a factor and carry exact multiplicity.
inline std::vector<Root> complex_roots(const QLaurent& p, const RootOptions& opt = {}) {
  if (p.is_zero()) throw MathError("zero_polynomial", "roots of the zero polynomial");
  std::vector<Root> out;
  if (p.min_exp() > 0) out.push_back({Complex{}, p.min_exp()});
  auto parts = squarefree_decomposition(p);
  if (parts.empty() && out.empty()) throw MathError("degree_zero", "complex_roots needs degree >= 1");
  for (const auto& [factor, mult] : parts) {
    auto roots = detail::roots_of_polynomial(to_complex_poly(factor), mult, opt);
    out.insert(out.end(), roots.begin(), roots.end());
  }
  out = detail::merge_clusters(std::move(out), opt.cluster);
  detail::sort_roots(out);
  return out;
}

struct SimpleRootCertificate {
  bool has_simple_root = false;
  // (multiplicity, degree of the square-free factor of that multiplicity)
  std::vector<std::pair<int, int>> factors;
};

inline SimpleRootCertificate has_simple_root(const QLaurent& p) {
  if (p.is_zero()) throw MathError("zero_polynomial", "has_simple_root of the zero polynomial");
  SimpleRootCertificate cert;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    cert.factors.emplace_back(mult, factor.max_exp());
    if (mult == 1) cert.has_simple_root = true;
  }
  return cert;
}

}  // namespace talex
