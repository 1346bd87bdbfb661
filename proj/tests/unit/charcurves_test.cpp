#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace talex;

namespace {

MultiPoly hv(const char* n, int p = 1) { return MultiPoly::variable(hlm_vars(), n, p); }
MultiPoly hc(long c) { return MultiPoly::constant(hlm_vars(), Rational(c)); }

}  // namespace

TEST(HLM, BaseCases) {
  EXPECT_TRUE(hlm_r(0).is_zero());
  EXPECT_EQ(hlm_r(1), hc(1));
  EXPECT_EQ(hlm_r(2), hv("v"));
  EXPECT_THROW(hlm_r(7), MathError);
}

// One step of the recursion expanded by hand (t_2 = -1): the y1^-1 terms
// cancel, leaving v^2 - y1 y2 v + y2^2 - 1.
TEST(HLM, ThirdTermByHand) {
  EXPECT_EQ(hlm_r(3), hv("v", 2) - hv("y1") * hv("y2") * hv("v") + hv("y2", 2) - hc(1));
}

TEST(HLM, SixthTermFactors) {
  const auto f = hlm_r6_factors();
  const MultiPoly r6 = hlm_r(6);
  EXPECT_EQ(r6, f[0] * f[1]);
  auto q = exact_divide(r6.times_monomial("y1", 5), f[0]);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, f[1].times_monomial("y1", 5));
}

TEST(ChangeOfVariables, RoundTripAndSlice) {
  const MultiPoly f = change_of_variables();
  EXPECT_EQ(f.support_vars(), (std::vector<std::string>{"y", "b", "w"}));
  EXPECT_EQ(undo_change_of_variables(f), hlm_r(6).times_monomial("y1", 5));

  const std::vector<std::string> R{"w", "y", "z"};
  auto w = MultiPoly::variable(R, "w"), y = MultiPoly::variable(R, "y");
  auto two = MultiPoly::constant(R, Rational(2));
  MultiPoly expect = (w.pow(2) - w * y + y.pow(2) - two) * (w.pow(3) - w.pow(2) * y + w * y.pow(2) - y);
  EXPECT_TRUE(scalar_ratio(elimination_input().product, expect).has_value());
}

TEST(Elimination, MatchesCurves) {
  const Elimination e = eliminate_w();
  EXPECT_NE(e.scalar, 0);
  // points with z = y^2 - 1 satisfy the resultant
  for (Rational y : {Rational(3, 2), Rational(-7, 5)}) {
    EXPECT_EQ(e.resultant.evaluate<Rational>({{"y", y}, {"z", y * y - 1}}), 0);
  }
  EXPECT_TRUE(exact_divide(e.resultant, curve_C().polynomial.pow(2)).has_value());
}

TEST(Elimination, LinearCase) {
  const std::vector<std::string> R{"w", "y", "z"};
  auto w = MultiPoly::variable(R, "w"), y = MultiPoly::variable(R, "y"), z = MultiPoly::variable(R, "z");
  EXPECT_TRUE(scalar_ratio(resultant(w - y, w - z, "w"), y - z).has_value());
}

TEST(Psi2, PolynomialAndRoots) {
  const QLaurent psi = psi2_polynomial();
  EXPECT_EQ(psi.to_string("x"), "x^3 + 6*x^2 + 6*x + 5");
  EXPECT_EQ(psi.evaluate<Rational>(Rational(1)), 18);
  auto q = exact_quotient(psi, parse_laurent("t + 5"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, parse_laurent("t^2 + t + 1"));
  for (const auto& r : complex_roots(psi - QLaurent::constant(1))) {
    EXPECT_GT(std::abs(r.value * r.value + r.value + 1.0), 0.1);
  }
}

TEST(Psi2, CertifiedAtSolvedRepresentations) {
  const Psi2Certificate cert = certify_psi2(10, 5);
  EXPECT_GE(cert.samples.size(), 20u);
  EXPECT_LE(cert.max_deviation, 1e-6);
  EXPECT_LE(cert.max_trace_defect, 1e-6);
  EXPECT_LE(cert.max_deviation_on_C_from_18, 1e-6);
  for (const auto& s : cert.samples) EXPECT_LT(std::abs(s.twisted_leading - s.det_a), 1e-6);
}

// A C' point with x = 0: the cubic in z at z = y^2 factors through y^2.
TEST(Psi2, ValueFiveWhereXVanishes) {
  const auto p = pretzel_presentation();
  const QLaurent yy = curve_C_prime().polynomial.substitute({{"z", MultiPoly::variable(yz_vars(), "y", 2)}}, yz_vars()).to_laurent("y");
  Complex y = 0;
  for (const auto& r : complex_roots(yy)) {
    if (std::abs(r.value) > 0.1) y = r.value;
  }
  ASSERT_NE(y, Complex(0));
  auto rho = solve_representation(p, symmetric_constraints(p, y, y * y));
  auto prof = coefficient_profile(p, rho, 1);
  EXPECT_LT(std::abs(prof.psi[2] - 5.0), 1e-6);
  auto ta = wada_invariant(p, rho);
  EXPECT_TRUE(determines_genus(ta, 1).determines);
}

TEST(Census, Counts) {
  const auto monic = census(curve_C_prime(), Rational(1));
  EXPECT_FALSE(monic.identically_satisfied);
  EXPECT_EQ(monic.count, 6);
  const auto degenerate = census(curve_C_prime(), Rational(0));
  EXPECT_EQ(degenerate.count, 2);
  for (const auto& w : degenerate.witnesses) EXPECT_NEAR(std::abs(w.y * w.y - w.z + 5.0), 0.0, 1e-8);
  EXPECT_TRUE(census(curve_C(), Rational(18)).identically_satisfied);
  EXPECT_EQ(census(curve_C(), Rational(1)).count, 0);
  for (const auto& c : {monic, degenerate}) {
    for (const auto& w : c.witnesses) {
      EXPECT_LE(w.curve_residual, 1e-8);
      EXPECT_LE(w.constraint_residual, 1e-8);
    }
  }
}

// Characters with psi_2 = 0 do not determine the genus.
TEST(Census, DegenerateWitnessDropsDegree) {
  const auto p = pretzel_presentation();
  const auto w = census(curve_C_prime(), Rational(0)).witnesses.at(0);
  auto rho = solve_representation(p, symmetric_constraints(p, w.y, w.z));
  auto ta = wada_invariant(p, rho);
  EXPECT_FALSE(determines_genus(ta, 1).determines);
  EXPECT_LT(ta.degree, 2);
}

TEST(Census, ClosedLoop) {
  const auto loop = closed_loop(census(curve_C_prime(), Rational(1)));
  ASSERT_EQ(loop.size(), 6u);
  for (const auto& l : loop) {
    EXPECT_LE(l.residual, 1e-8);
    EXPECT_LT(std::abs(l.leading - 1.0), 1e-5);
    EXPECT_TRUE(l.monic);
  }
}

TEST(Pretzel, CharacterIsSymmetricOnCurves) {
  const auto p = pretzel_presentation();
  const Complex y(0.8, 0.3);
  auto rho = solve_representation(p, symmetric_constraints(p, y, y * y - 1.0));
  auto ch = character_of(rho, standard_trace_words(3), p.generator_names);
  EXPECT_LT(std::abs(ch.traces.at("a") - ch.traces.at("c")), 1e-6);
  EXPECT_LT(std::abs(ch.traces.at("ab") - ch.traces.at("bc")), 1e-6);
  EXPECT_LT(std::abs(ch.traces.at("ac") - ch.traces.at("ab")), 1e-6);
}
