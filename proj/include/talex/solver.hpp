#pragma once

// Numerical solution of the representation variety with prescribed trace
// coordinates.
//
// Gauge: the first generator is [[m, 1], [0, 1/m]] and the second is
// [[m', 0], [u, 1/m']]; m, m' come from prescribed generator traces and u from
// the prescribed trace of their product when those are given, and are
// unknowns otherwise. Every further generator has four free entries. The
// residual stacks relator entries rho(r) - I, det - 1 for the free generators,
// and tr rho(w) - target for every trace constraint (weight 1). It is driven to
// zero by Levenberg-Marquardt steps from seeded random starts.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/presentation.hpp"
#include "talex/sl2.hpp"
#include "talex/words.hpp"

namespace talex {

struct TraceConstraint {
  FreeWord word;
  Complex value;
};

struct SolveOptions {
  std::uint64_t seed = 0;
  int restarts = 50;
  int max_iterations = 300;
  double target = 1e-10;          // accepted relator residual
  bool require_irreducible = true;
};

// Deterministic across platforms (no std distributions involved).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Eigenvalue m with m + 1/m = trace.
inline Complex eigenvalue_for_trace(Complex trace) {
  Complex m = 0.5 * (trace + std::sqrt(trace * trace - 4.0));
  if (std::abs(m) < 1e-300) throw MathError("bad_trace", "degenerate trace");
  return m;
}

namespace detail {

class GaugeSystem {
 public:
  GaugeSystem(const Presentation& p, const std::vector<TraceConstraint>& constraints) : p_(p), constraints_(constraints) {
    const int n = p.generator_count();
    if (n < 2) throw MathError("too_few_generators", "solver needs at least two generators");
    const FreeWord g0 = FreeWord::generator(0), g1 = FreeWord::generator(1), g01 = g0 * g1;
    for (const auto& c : constraints) {
      if (c.word.max_generator() >= n) throw MathError("unknown_generator", "constraint mentions an unknown generator");
      if (c.word == g0) m0_ = eigenvalue_for_trace(c.value);
      if (c.word == g1) m1_ = eigenvalue_for_trace(c.value);
    }
    if (p.meridional) check_meridian_traces();
    if (m0_ && !m1_ && p.meridional) m1_ = m0_;
    if (m0_ && m1_) {
      for (const auto& c : constraints) {
        if (c.word == g01) u_ = c.value - (*m0_) * (*m1_) - 1.0 / ((*m0_) * (*m1_));
      }
    }
    unknowns_ = (m0_ ? 0 : 1) + (m1_ ? 0 : 1) + (u_ ? 0 : 1) + 4 * (n - 2);
  }

  int unknowns() const { return unknowns_; }

  Representation<Complex> build(const Eigen::VectorXcd& x) const {
    Representation<Complex> rho;
    int k = 0;
    Complex m0 = m0_ ? *m0_ : x(k++);
    Complex m1 = m1_ ? *m1_ : x(k++);
    Complex u = u_ ? *u_ : x(k++);
    rho.images.push_back({m0, 1.0, 0.0, 1.0 / m0});
    rho.images.push_back({m1, 0.0, u, 1.0 / m1});
    for (int g = 2; g < p_.generator_count(); ++g) {
      rho.images.push_back({x(k), x(k + 1), x(k + 2), x(k + 3)});
      k += 4;
    }
    return rho;
  }

  Eigen::VectorXcd residual(const Eigen::VectorXcd& x) const {
    Representation<Complex> rho = build(x);
    std::vector<Complex> r;
    for (const auto& rel : p_.relators) {
      CMat2 m = image_of(rho, rel);
      r.insert(r.end(), {m.a - 1.0, m.b, m.c, m.d - 1.0});
    }
    for (std::size_t g = 2; g < rho.images.size(); ++g) r.push_back(rho.images[g].det() - 1.0);
    for (const auto& c : constraints_) r.push_back(image_of(rho, c.word).trace() - c.value);
    return Eigen::Map<Eigen::VectorXcd>(r.data(), static_cast<Eigen::Index>(r.size()));
  }

  // Later attempts sample a wider box: LM stalls at critical points of the
  // relator map, and distant roots need starts nearby.
  Eigen::VectorXcd random_start(SplitMix64& rng, int attempt = 0) const {
    Eigen::VectorXcd x(unknowns_);
    int k = 0;
    const double scale = 1.0 + attempt / 8.0;
    auto unit_ish = [&] { return std::polar(rng.uniform(0.6, 1.6), rng.uniform(0.0, 6.283185307179586)); };
    if (!m0_) x(k++) = unit_ish();
    if (!m1_) x(k++) = unit_ish();
    if (!u_) x(k++) = scale * Complex(rng.uniform(-2, 2), rng.uniform(-2, 2));
    for (; k < unknowns_; ++k) x(k) = scale * Complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    return x;
  }

 private:
  void check_meridian_traces() const {
    std::optional<Complex> seen;
    for (const auto& c : constraints_) {
      if (c.word.length() != 1 || c.word.letters()[0].exp != 1) continue;
      if (seen && std::abs(*seen - c.value) > 1e-9 * std::max(1.0, std::abs(c.value))) {
        throw MathError("inconsistent_constraints", "meridional generators are conjugate, so their traces must agree");
      }
      seen = c.value;
    }
  }

  const Presentation& p_;
  const std::vector<TraceConstraint>& constraints_;
  std::optional<Complex> m0_, m1_, u_;
  int unknowns_ = 0;
};

inline Eigen::MatrixXcd jacobian(const GaugeSystem& sys, const Eigen::VectorXcd& x, Eigen::Index rows) {
  Eigen::MatrixXcd j(rows, x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(x(k)));
    Eigen::VectorXcd xp = x, xm = x;
    xp(k) += h;
    xm(k) -= h;
    j.col(k) = (sys.residual(xp) - sys.residual(xm)) / (2.0 * h);
  }
  return j;
}

// Levenberg-Marquardt on the holomorphic residual. Returns the final point.
inline Eigen::VectorXcd levenberg_marquardt(const GaugeSystem& sys, Eigen::VectorXcd x, int max_iterations, double target) {
  Eigen::VectorXcd r = sys.residual(x);
  double cost = r.squaredNorm();
  double mu = 1e-3;
  for (int it = 0; it < max_iterations && r.cwiseAbs().maxCoeff() > 1e-3 * target; ++it) {
    Eigen::MatrixXcd j = jacobian(sys, x, r.size());
    Eigen::MatrixXcd normal = j.adjoint() * j;
    Eigen::VectorXcd grad = j.adjoint() * r;
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::MatrixXcd damped = normal;
      damped.diagonal().array() += mu * (1.0 + normal.diagonal().real().array());
      Eigen::VectorXcd step = damped.ldlt().solve(-grad);
      if (!step.allFinite()) {
        mu *= 10;
        continue;
      }
      Eigen::VectorXcd trial = x + step;
      Eigen::VectorXcd rt = sys.residual(trial);
      double ct = rt.allFinite() ? rt.squaredNorm() : INFINITY;
      if (ct < cost) {
        x = std::move(trial);
        r = std::move(rt);
        cost = ct;
        mu = std::max(mu / 5.0, 1e-15);
        improved = true;
        break;
      }
      mu *= 8.0;
    }
    if (!improved) break;
  }
  return x;
}

}  // namespace detail

// The first successful restart (lowest index) wins; the result depends only
// on (presentation, constraints, seed).
inline Representation<Complex> solve_representation(const Presentation& p, const std::vector<TraceConstraint>& constraints,
                                                    const SolveOptions& opt = {}) {
  detail::GaugeSystem sys(p, constraints);
  bool saw_reducible = false;
  double best = INFINITY;
  for (int attempt = 0; attempt < opt.restarts; ++attempt) {
    SplitMix64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt) + 1);
    Eigen::VectorXcd x = sys.random_start(rng, attempt);
    if (sys.unknowns() > 0) x = detail::levenberg_marquardt(sys, x, opt.max_iterations, opt.target);
    Eigen::VectorXcd r = sys.residual(x);
    if (!r.allFinite()) continue;
    const double constraint_error = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
    Representation<Complex> rho = measured(sys.build(x), p);
    best = std::min(best, std::max(rho.residual, constraint_error));
    if (rho.residual > opt.target || constraint_error > 10 * opt.target || rho.determinant_drift > 1e-9) continue;
    if (opt.require_irreducible && is_reducible(rho)) {
      saw_reducible = true;
      continue;
    }
    return rho;
  }
  if (saw_reducible) {
    throw SolverError("reducible_solution", "only reducible solutions were found for the requested constraints");
  }
  std::ostringstream os;
  os << "no representation found after " << opt.restarts << " restarts (best residual " << best << ")";
  throw SolverError("nonconvergence", os.str());
}

// Constraint files: "trace <word> = <re> <im>" lines, and optionally one
// "sweep <re0> <im0> <re1> <im1> <samples>" line describing a straight path
// for the meridian trace.
struct TraceSweep {
  Complex from, to;
  int samples = 0;

  Complex at(int i) const {
    if (samples <= 1) return from;
    return from + (to - from) * (static_cast<double>(i) / (samples - 1));
  }
};

struct ConstraintSet {
  std::vector<TraceConstraint> traces;
  std::optional<TraceSweep> sweep;
};

inline ConstraintSet parse_constraints(const std::string& text, const Presentation& p) {
  ConstraintSet out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string keyword;
    ls >> keyword;
    if (keyword == "trace") {
      std::string word, eq;
      double re = 0, im = 0;
      if (!(ls >> word >> eq >> re >> im) || eq != "=") throw ParseError("bad_constraint", "expected 'trace <word> = <re> <im>': " + line);
      out.traces.push_back({parse_word(word, p.generator_names), {re, im}});
    } else if (keyword == "sweep") {
      double r0, i0, r1, i1;
      int n;
      if (!(ls >> r0 >> i0 >> r1 >> i1 >> n) || n < 1) throw ParseError("bad_constraint", "expected 'sweep re0 im0 re1 im1 n': " + line);
      out.sweep = TraceSweep{{r0, i0}, {r1, i1}, n};
    } else {
      throw ParseError("bad_constraint", "unknown constraint line: " + line);
    }
  }
  return out;
}

// Constraints fixing the trace of every generator to y (meridional presentations).
inline std::vector<TraceConstraint> meridian_constraints(const Presentation& p, Complex y) {
  std::vector<TraceConstraint> out;
  for (int g = 0; g < p.generator_count(); ++g) out.push_back({FreeWord::generator(g), y});
  return out;
}

}  // namespace talex
