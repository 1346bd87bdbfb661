#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"

using namespace talex;

TEST(Solver, TrefoilWithPrescribedTraces) {
  auto p = oracle::fixture_presentation("3_1");
  const Complex y = 2 * std::cos(std::numbers::pi / 5);
  auto cs = meridian_constraints(p, y);
  cs.push_back({parse_word("ab", p.generator_names), Complex(1.0)});
  auto rho = solve_representation(p, cs);
  EXPECT_LE(rho.residual, 1e-10);
  EXPECT_LE(rho.determinant_drift, 1e-12);
  EXPECT_LT(std::abs(image_of(rho, FreeWord::generator(1)).trace() - y), 1e-10);
  EXPECT_FALSE(is_reducible(rho));
}

// Nonabelian trefoil representations have tr ab = 1; anything else fails.
TEST(Solver, TrefoilOffCurveFails) {
  auto p = oracle::fixture_presentation("3_1");
  auto cs = meridian_constraints(p, {1.2, 0.0});
  cs.push_back({parse_word("ab", p.generator_names), {0.3, 0.2}});
  SolveOptions opt;
  opt.restarts = 5;
  EXPECT_THROW(solve_representation(p, cs, opt), SolverError);
}

// The root u = 3 - y^2 lies outside the first start box here.
TEST(Solver, TrefoilSmallMeridianTrace) {
  auto p = oracle::fixture_presentation("3_1");
  for (Complex y : {Complex(0.3, 0.4), Complex(0.0, 0.4), Complex(0.05, 0.01)}) {
    auto rho = solve_representation(p, meridian_constraints(p, y));
    EXPECT_LT(std::abs(image_of(rho, parse_word("ab", p.generator_names)).trace() - 1.0), 1e-9) << y;
  }
}

TEST(Solver, DeterministicForSeed) {
  auto p = oracle::fixture_presentation("9_35");
  SolveOptions opt;
  opt.seed = 42;
  auto a = solve_representation(p, meridian_constraints(p, {0.5, 0.5}), opt);
  auto b = solve_representation(p, meridian_constraints(p, {0.5, 0.5}), opt);
  for (std::size_t i = 0; i < a.images.size(); ++i) EXPECT_EQ(a.images[i], b.images[i]);
}

TEST(Solver, InconsistentMeridianTraces) {
  auto p = oracle::fixture_presentation("3_1");
  std::vector<TraceConstraint> cs{{FreeWord::generator(0), 1.0}, {FreeWord::generator(1), 1.5}};
  try {
    solve_representation(p, cs);
    FAIL() << "expected an error";
  } catch (const MathError& e) {
    EXPECT_EQ(e.reason(), "inconsistent_constraints");
  }
}

// Trace 2 with product trace 2 forces a reducible (parabolic) representation.
TEST(Solver, ReducibleOnlyIsReported) {
  auto p = oracle::fixture_presentation("3_1");
  auto cs = meridian_constraints(p, 2.0);
  cs.push_back({parse_word("ab", p.generator_names), 2.0});
  SolveOptions opt;
  opt.restarts = 5;
  EXPECT_THROW(solve_representation(p, cs, opt), SolverError);
}

TEST(Solver, WirtingerPresentationFromDiagram) {
  auto p = oracle::fixture_presentation("8_20");
  auto rho = solve_representation(p, meridian_constraints(p, {0.6, 0.9}));
  EXPECT_LE(rho.residual, 1e-10);
  auto ta = wada_invariant(p, rho);
  ASSERT_TRUE(ta.is_polynomial());
  EXPECT_LE(ta.degree, 4 * 2 - 2);  // 8_20 has genus 2
}

TEST(Constraints, ParseFile) {
  auto p = oracle::fixture_presentation("3_1");
  auto cs = parse_constraints("# c\ntrace a = 1.5 0\ntrace ab = 0.25 -1\nsweep 0 0 2 0 5\n", p);
  ASSERT_EQ(cs.traces.size(), 2u);
  EXPECT_EQ(cs.traces[1].value, Complex(0.25, -1));
  ASSERT_TRUE(cs.sweep.has_value());
  EXPECT_EQ(cs.sweep->at(4), Complex(2, 0));
  EXPECT_THROW(parse_constraints("trace a 1 0\n", p), ParseError);
  EXPECT_THROW(parse_constraints("trace x = 1 0\n", p), ParseError);
}
