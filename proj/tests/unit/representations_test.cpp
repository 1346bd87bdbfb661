#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"

using namespace talex;

TEST(AbelianRep, Traces) {
  auto p = oracle::fixture_presentation("3_1");
  auto trivial = abelian_rep(p, Rational(1));
  for (const auto& w : standard_trace_words(2)) EXPECT_EQ(image_of(trivial, w).trace(), 2);
  auto rho = abelian_rep(p, Complex(0, 1));
  EXPECT_LT(std::abs(image_of(rho, FreeWord::generator(0)).trace()), 1e-15);
  EXPECT_EQ(rho.residual, 0);
  // exponent sum m gives lambda^m + lambda^-m
  auto q = abelian_rep(p, Rational(2));
  auto w = parse_word("aab", p.generator_names);
  EXPECT_EQ(image_of(q, w).trace(), Rational(8) + Rational(1, 8));
  EXPECT_THROW(abelian_rep(p, Rational(0)), MathError);
}

TEST(BurdeDeRham, Examples) {
  const QLaurent d935 = parse_laurent("7*t^2 - 13*t + 7");
  const Complex root = (13.0 + Complex(0, std::sqrt(27.0))) / 14.0;
  EXPECT_TRUE(burde_derham_check(d935, std::sqrt(root)));
  EXPECT_FALSE(burde_derham_check(d935, Complex(1.3, 0.2)));
  const QLaurent tre = parse_laurent("t^2 - t + 1");
  EXPECT_FALSE(burde_derham_check(tre, 1.0));
  EXPECT_TRUE(burde_derham_check(tre, std::polar(1.0, std::numbers::pi / 6)));
}

// At a Burde-de Rham point the 9_35 diagonal representation is valid and the
// closed form has leading coefficient 49.
TEST(ReducibleFormula, NineThirtyFiveAtRoot) {
  const QLaurent d = parse_laurent("7*t^2 - 13*t + 7");
  const Complex lambda = std::sqrt((13.0 + Complex(0, std::sqrt(27.0))) / 14.0);
  auto p = oracle::fixture_presentation("9_35");
  EXPECT_TRUE(is_valid(abelian_rep(p, lambda)));
  auto ta = reducible_formula(d, lambda);
  ASSERT_TRUE(ta.is_polynomial());
  EXPECT_EQ(ta.degree, 2);
  EXPECT_LT(std::abs(ta.leading - 49.0), 1e-8);
  EXPECT_FALSE(ta.monic);
}

TEST(ReducibleFormula, TrefoilAtRootIsMonic) {
  auto ta = reducible_formula(parse_laurent("t^2 - t + 1"), std::polar(1.0, std::numbers::pi / 6));
  ASSERT_TRUE(ta.is_polynomial());
  EXPECT_TRUE(ta.monic);
}

TEST(ReducibleFormula, UnknotIsNotPolynomial) {
  auto ta = reducible_formula(QLaurent::constant(1), Rational(3));
  EXPECT_FALSE(ta.is_polynomial());
  EXPECT_EQ(ta.value.num, QLaurent::constant(1));
  EXPECT_EQ(ta.value.den, parse_laurent("t^2 - 10/3 t + 1"));
}

TEST(Satellite, Examples) {
  const QLaurent tre = parse_laurent("t^2 - t + 1");
  EXPECT_EQ(satellite_alexander(parse_laurent("7t^2 - 13t + 7"), tre, 0), parse_laurent("7t^2 - 13t + 7"));
  EXPECT_EQ(satellite_alexander(tre, tre, 2), parse_laurent("(t^2 - t + 1)(t^4 - t^2 + 1)"));
  EXPECT_EQ(satellite_alexander(QLaurent::constant(1), parse_laurent("2t^2 - 3t + 2"), 1), parse_laurent("2t^2 - 3t + 2"));
}

TEST(Character, ConjugationInvariant) {
  auto p = oracle::fixture_presentation("9_35");
  auto rho = solve_representation(p, meridian_constraints(p, {0.8, 0.6}));
  CMat2 g{{2.0, 0.0}, {1.0, 1.0}, {0.5, -0.5}, {0.0, 0.0}};
  g.d = (1.0 + g.b * g.c) / g.a;
  auto words = standard_trace_words(3);
  auto a = character_of(rho, words, p.generator_names), b = character_of(conjugated(rho, g), words, p.generator_names);
  for (const auto& [name, value] : a.traces) EXPECT_LT(std::abs(value - b.traces.at(name)), 1e-8) << name;
}
