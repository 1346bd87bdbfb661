#pragma once

// Character curves of the (-3,-3,-3) pretzel knot from the 12/5 two-bridge
// link trace recursion, the top coefficient function psi_2 on them, and
// censuses of characters where psi_2 takes a given value.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"
#include "talex/multipoly.hpp"
#include "talex/parallel.hpp"
#include "talex/presentation.hpp"
#include "talex/resultant.hpp"
#include "talex/roots.hpp"
#include "talex/sl2.hpp"
#include "talex/solver.hpp"
#include "talex/twisted.hpp"

namespace talex {

inline const std::vector<std::string>& hlm_vars() {
  static const std::vector<std::string> v{"y1", "y2", "v"};
  return v;
}

// r_m(y1, y2, v), Laurent in y1.
inline MultiPoly hlm_r(int m) {
  if (m < 0 || m > 6) throw MathError("out_of_range", "hlm_r is defined for 0 <= m <= 6");
  const auto& V = hlm_vars();
  static const int t[] = {0, 1, -1, 1, -1, 1};
  auto var = [&](const char* n, int p = 1) { return MultiPoly::variable(V, n, p); };
  auto num = [&](long c) { return MultiPoly::constant(V, Rational(c)); };
  const Rational half(1, 2);

  std::vector<MultiPoly> r{num(0), num(1), var("v")};
  for (int k = 3; k <= m; ++k) {
    const MultiPoly ty = var("y1", -1) * var("y2") * num(t[k - 1]);  // y1^-1 y2 t_{k-1}
    const MultiPoly y1y2 = var("y1") * var("y2");
    MultiPoly c1 = -ty;
    MultiPoly c2 = (num(-2) + var("y2", 2) + ty * (num(2) * var("v") - y1y2)) * half;
    MultiPoly c3 = (num(-2) * ty + y1y2 * num(t[k - 1]) + num(2) * var("v") - y1y2) * half;
    const auto K = static_cast<std::size_t>(k);
    r.push_back(c1 * r[K - 3].swapped("y1", "y2") + c2 * r[K - 2] + c3 * r[K - 1].swapped("y1", "y2"));
  }
  return r[static_cast<std::size_t>(m)];
}

// The two factors of r_6.
inline std::array<MultiPoly, 2> hlm_r6_factors() {
  const auto& V = hlm_vars();
  auto v = MultiPoly::variable(V, "v"), y1 = MultiPoly::variable(V, "y1"), y2 = MultiPoly::variable(V, "y2");
  auto one = MultiPoly::constant(V, Rational(1));
  return {v.pow(2) - v * y1 * y2 + y1.pow(2) + y2.pow(2) - one * Rational(3),
          v.pow(3) - v.pow(2) * y1 * y2 + v * y1.pow(2) + v * y2.pow(2) - v - y1 * y2};
}

// y1^5 r_6 rewritten with y = y2, b = y1^2 - 2, w = y1 v.
inline MultiPoly change_of_variables() {
  const std::vector<std::string> out_vars{"y", "b", "w"};
  const MultiPoly p = hlm_r(6).times_monomial("y1", 5);
  if (!p.is_polynomial()) throw MathError("not_polynomial", "y1^5 r_6 still has negative powers of y1");
  const std::size_t iy1 = 0, iy2 = 1, iv = 2;  // hlm_vars() order
  const MultiPoly b_plus_2 = MultiPoly::variable(out_vars, "b") + MultiPoly::constant(out_vars, Rational(2));
  MultiPoly f(out_vars);
  for (const auto& [e, c] : p.terms()) {
    const int rest = e[iy1] - e[iv];
    if (rest < 0 || rest % 2 != 0) {
      throw MathError("unpaired_y1", "a power of y1 cannot be absorbed by w = y1 v and y1^2 = b + 2");
    }
    MultiPoly term = MultiPoly::constant(out_vars, c);
    term = term * MultiPoly::variable(out_vars, "y", e[iy2]) * MultiPoly::variable(out_vars, "w", e[iv]) *
           b_plus_2.pow(static_cast<unsigned>(rest / 2));
    f += term;
  }
  return f;
}

// f(y, b, w) pulled back along b = y1^2 - 2, w = y1 v; y1^5 r_6 if consistent.
inline MultiPoly undo_change_of_variables(const MultiPoly& f) {
  const auto& V = hlm_vars();
  auto y1 = MultiPoly::variable(V, "y1");
  std::map<std::string, MultiPoly> img{{"y", MultiPoly::variable(V, "y2")},
                                       {"b", y1.pow(2) - MultiPoly::constant(V, Rational(2))},
                                       {"w", y1 * MultiPoly::variable(V, "v")}};
  return f.substitute(img, V);
}

inline const std::vector<std::string>& yz_vars() {
  static const std::vector<std::string> v{"y", "z"};
  return v;
}

// The b = -1 slice, as polynomials in (w, y, z).
struct EliminationInput {
  MultiPoly product;  // f(y, -1, w)
  MultiPoly second;   // w^2 - w y + z - 1
};

inline EliminationInput elimination_input() {
  const std::vector<std::string> R{"w", "y", "z"};
  MultiPoly f = change_of_variables().substitute({{"b", MultiPoly::constant(R, Rational(-1))}}, R);
  auto w = MultiPoly::variable(R, "w"), y = MultiPoly::variable(R, "y"), z = MultiPoly::variable(R, "z");
  return {f, w.pow(2) - w * y + z - MultiPoly::constant(R, Rational(1))};
}

struct PlaneCurve {
  MultiPoly polynomial;  // in (y, z), primitive
  std::string label;
};

inline PlaneCurve curve_C() {
  auto y = MultiPoly::variable(yz_vars(), "y"), z = MultiPoly::variable(yz_vars(), "z");
  return {(y.pow(2) - z - MultiPoly::constant(yz_vars(), Rational(1))).primitive(), "C"};
}

inline PlaneCurve curve_C_prime() {
  const auto& R = yz_vars();
  auto y = MultiPoly::variable(R, "y"), z = MultiPoly::variable(R, "z");
  auto k = [&](long c) { return MultiPoly::constant(R, Rational(c)); };
  MultiPoly q = y.pow(4) * z - k(2) * y.pow(4) - k(2) * y.pow(2) * z.pow(2) + k(5) * y.pow(2) * z - k(2) * y.pow(2) + z.pow(3) -
                k(3) * z.pow(2) + k(3) * z - k(1);
  return {q.primitive(), "C'"};
}

struct Elimination {
  MultiPoly resultant;  // in (y, z)
  Rational scalar;      // resultant = scalar * C^2 * C'
};

// Res_w of the b = -1 equations, certified against C^2 C' by two-sided
// exact division.
inline Elimination eliminate_w() {
  auto in = elimination_input();
  MultiPoly res = resultant(in.product, in.second, "w").in_ring(yz_vars());
  MultiPoly expected = curve_C().polynomial.pow(2) * curve_C_prime().polynomial;
  auto c = scalar_ratio(res, expected);
  if (!c) throw CertificationError("elimination_mismatch", "resultant is not a scalar multiple of C^2 C'");
  return {res, *c};
}

// psi_2 = x^3 + 6x^2 + 6x + 5 with x = y^2 - z.
inline QLaurent psi2_polynomial() { return QLaurent::from_coefficients({Rational(5), Rational(6), Rational(6), Rational(1)}); }

inline Presentation pretzel_presentation() {
  return parse_presentation("gens: a b c\nrel: aBabAbCbCBcB\nrel: bCbcBcAcACaC\n");
}

// Traces tr a = tr b = tr c = y and tr ab = tr bc = tr ca = z.
inline std::vector<TraceConstraint> symmetric_constraints(const Presentation& p, Complex y, Complex z) {
  std::vector<TraceConstraint> out = meridian_constraints(p, y);
  const auto& n = p.generator_names;
  for (const char* w : {"ab", "bc", "ca"}) out.push_back({parse_word(w, n), z});
  return out;
}

// Leading block A of Phi(M_c) = A t + B.
inline SquareMatrix<Complex> top_block(const Presentation& p, const CRepresentation& rho) {
  auto r = [&](const char* w) { return image_of(rho, parse_word(w, p.generator_names)); };
  const CMat2 a11 = -1.0 * r("aBabA");
  const CMat2 a12 = r("aBa") + r("aBabA") + r("aBabAbC");
  const CMat2 a21 = -1.0 * (r("bCbcBcA") + r("bCbcBcAcA"));
  const CMat2 a22 = -1.0 * r("bCbcB");
  SquareMatrix<Complex> m(4, Complex{});
  const CMat2* blocks[2][2] = {{&a11, &a12}, {&a21, &a22}};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m(2 * i, 2 * j) = blocks[i][j]->a;
      m(2 * i, 2 * j + 1) = blocks[i][j]->b;
      m(2 * i + 1, 2 * j) = blocks[i][j]->c;
      m(2 * i + 1, 2 * j + 1) = blocks[i][j]->d;
    }
  }
  return m;
}

struct Psi2Sample {
  std::string curve;
  Complex y, z, x;
  Complex det_a;           // det A from the solved representation
  Complex twisted_leading; // leading coefficient of the Wada invariant
  double deviation = 0;    // |det A - psi_2(x)|
  double trace_defect = 0; // worst trace-identity mismatch
  double residual = 0;
};

struct Psi2Certificate {
  QLaurent psi2;
  std::vector<Psi2Sample> samples;
  double max_deviation = 0;
  double max_trace_defect = 0;
  double max_deviation_on_C_from_18 = 0;
};

// Sample points (y, z): z = y^2 - 1 on C, all roots of the cubic in z on C'.
inline std::vector<std::pair<std::string, std::array<Complex, 2>>> psi2_sample_points(int per_curve = 12) {
  std::vector<std::pair<std::string, std::array<Complex, 2>>> pts;
  const MultiPoly cp = curve_C_prime().polynomial;
  for (int k = 0; k < per_curve; ++k) {
    const Complex y(0.35 + 0.17 * k, 0.6 - 0.05 * k);
    pts.push_back({"C", {y, y * y - 1.0}});
  }
  for (int k = 0; pts.size() < static_cast<std::size_t>(2 * per_curve); ++k) {
    const Complex y(0.4 + 0.21 * k, 0.45 + 0.03 * k);
    for (const auto& root : complex_roots(cp.to_univariate("z", {{"y", y}}))) {
      if (pts.size() < static_cast<std::size_t>(2 * per_curve)) pts.push_back({"C'", {y, root.value}});
    }
  }
  return pts;
}

inline Psi2Certificate certify_psi2(int per_curve = 12, std::uint64_t seed = 0, double tolerance = 1e-6) {
  const Presentation p = pretzel_presentation();
  const QLaurent psi = psi2_polynomial();
  const auto pts = psi2_sample_points(per_curve);
  Psi2Certificate cert;
  cert.psi2 = psi;
  cert.samples.resize(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto& [label, yz] = pts[i];
    Psi2Sample s;
    s.curve = label;
    s.y = yz[0];
    s.z = yz[1];
    s.x = s.y * s.y - s.z;
    SolveOptions opt;
    opt.seed = seed + i;
    const CRepresentation rho = solve_representation(p, symmetric_constraints(p, s.y, s.z), opt);
    s.residual = rho.residual;
    s.det_a = det(top_block(p, rho));
    s.twisted_leading = wada_invariant(p, rho).leading;
    s.deviation = std::abs(s.det_a - psi.evaluate_complex(s.x));
    const Complex x = s.x;
    auto tr = [&](const char* w) { return image_of(rho, parse_word(w, p.generator_names)).trace(); };
    const std::pair<const char*, Complex> identities[] = {
        {"aB", x}, {"bC", x}, {"cA", x},
        {"aBaB", x * x - 2.0}, {"bCbC", x * x - 2.0}, {"cAcA", x * x - 2.0},
        {"aBaC", x * x - x}, {"bCbA", x * x - x}, {"cAcB", x * x - x},
        {"aBcAbC", -x * x * x + 3.0 * x * x - 2.0},
    };
    for (const auto& [w, expect] : identities) s.trace_defect = std::max(s.trace_defect, std::abs(tr(w) - expect));
    cert.samples[i] = s;
  });
  for (const auto& s : cert.samples) {
    cert.max_deviation = std::max(cert.max_deviation, s.deviation);
    cert.max_trace_defect = std::max(cert.max_trace_defect, s.trace_defect);
    if (s.curve == "C") cert.max_deviation_on_C_from_18 = std::max(cert.max_deviation_on_C_from_18, std::abs(s.det_a - 18.0));
    const double worst = std::max({s.deviation, s.trace_defect, std::abs(s.twisted_leading - s.det_a)});
    if (worst > tolerance) {
      std::ostringstream os;
      os << "psi_2 certification failed on " << s.curve << " at y=" << coeff_string(s.y) << " z=" << coeff_string(s.z)
         << " (deviation " << worst << ")";
      throw CertificationError("psi2_mismatch", os.str());
    }
  }
  return cert;
}

struct CensusWitness {
  Complex y, z;
  int multiplicity = 1;
  double curve_residual = 0;
  double constraint_residual = 0;
};

struct CensusResult {
  Complex value;
  bool identically_satisfied = false;
  int count = 0;
  std::vector<CensusWitness> witnesses;
};

namespace detail {

inline double scaled_residual(const MultiPoly& f, Complex y, Complex z) {
  double scale = 0;
  for (const auto& [e, c] : f.terms()) scale += magnitude(c) * std::pow(std::abs(y), e[0]) * std::pow(std::abs(z), e[1]);
  return std::abs(f.evaluate<Complex>({{"y", y}, {"z", z}})) / std::max(scale, 1.0);
}

// F(y, y^2 - x) in the ring (y, x).
inline MultiPoly curve_in_x(const PlaneCurve& curve) {
  const std::vector<std::string> R{"y", "x"};
  auto y = MultiPoly::variable(R, "y"), x = MultiPoly::variable(R, "x");
  return curve.polynomial.substitute({{"y", y}, {"z", y.pow(2) - x}}, R);
}

}  // namespace detail

// Characters (y, z) on the curve with psi_2(y^2 - z) = value. An exact value
// is first tested for psi_2 - value vanishing on the whole curve.
inline CensusResult census(const PlaneCurve& curve, const Rational& value, const Tolerances& tol = {}) {
  CensusResult out;
  out.value = to_complex(value);
  const QLaurent g = psi2_polynomial() - QLaurent::monomial(value, 0);
  {
    const auto& R = yz_vars();
    auto y = MultiPoly::variable(R, "y"), z = MultiPoly::variable(R, "z");
    MultiPoly on_curve = MultiPoly::from_laurent({"x"}, "x", g).substitute({{"x", y.pow(2) - z}}, R);
    if (on_curve.is_zero() || exact_divide(on_curve, curve.polynomial)) {
      out.identically_satisfied = true;
      return out;
    }
  }
  const MultiPoly h = detail::curve_in_x(curve);
  RootOptions ropt;
  ropt.cluster = tol.cluster;
  for (const auto& xr : complex_roots(g, ropt)) {
    CLaurent hy = h.to_univariate("y", {{"x", xr.value}}).cleaned(tol.clean);
    if (hy.is_zero()) throw MathError("infinite_census", "curve contains the whole fibre x = const");
    if (hy.is_constant()) continue;  // no affine point over this x
    for (const auto& yr : complex_roots(hy, ropt)) {
      CensusWitness w{yr.value, yr.value * yr.value - xr.value, yr.multiplicity};
      bool dup = false;
      for (const auto& other : out.witnesses) {
        if (std::abs(other.y - w.y) <= tol.cluster && std::abs(other.z - w.z) <= tol.cluster) dup = true;
      }
      if (dup) continue;
      w.curve_residual = detail::scaled_residual(curve.polynomial, w.y, w.z);
      w.constraint_residual = std::abs(psi2_polynomial().evaluate_complex(w.y * w.y - w.z) - out.value);
      if (w.curve_residual > tol.residual || w.constraint_residual > tol.residual) {
        throw CertificationError("census_residual", "census witness fails the curve or constraint equation");
      }
      out.witnesses.push_back(w);
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(), [](const CensusWitness& a, const CensusWitness& b) {
    if (a.y.real() != b.y.real()) return a.y.real() < b.y.real();
    return a.y.imag() < b.y.imag();
  });
  out.count = static_cast<int>(out.witnesses.size());
  return out;
}

struct LoopCheck {
  CensusWitness witness;
  double residual = 0;
  Complex leading;
  int degree = 0;
  bool monic = false;
};

// Solves each witness to a representation and reads the twisted invariant.
inline std::vector<LoopCheck> closed_loop(const CensusResult& c, std::uint64_t seed = 0, double tol = 1e-5) {
  const Presentation p = pretzel_presentation();
  std::vector<LoopCheck> out(c.witnesses.size());
  parallel_for(out.size(), [&](std::size_t i) {
    const auto& w = c.witnesses[i];
    SolveOptions opt;
    opt.seed = seed + i;
    const CRepresentation rho = solve_representation(p, symmetric_constraints(p, w.y, w.z), opt);
    Tolerances t;
    t.monic = tol;
    const auto ta = wada_invariant(p, rho, std::nullopt, t);
    out[i] = {w, rho.residual, ta.leading, ta.degree, ta.monic};
  });
  return out;
}

}  // namespace talex
