#include <gtest/gtest.h>

#include "oracles.hpp"
#include "talex/io.hpp"

using namespace talex;

TEST(Io, LaurentJson) {
  Json j = to_json(parse_laurent("7*t^2 - 13*t + 7"));
  EXPECT_EQ(j["text"], "7*t^2 - 13*t + 7");
  EXPECT_EQ(j["coeffs"]["1"], "-13/1");
}

TEST(Io, ExactRepresentationRoundTrip) {
  auto any = parse_representation(R"({"generators": [[1, "1/2", 0, 1], [1, 0, -2, 1]]})");
  ASSERT_TRUE(std::holds_alternative<Representation<Rational>>(any));
  const auto& rho = std::get<Representation<Rational>>(any);
  EXPECT_EQ(rho.images[0].b, Rational(1, 2));
}

TEST(Io, ComplexRepresentation) {
  auto p = oracle::fixture_presentation("3_1");
  auto rho = solve_representation(p, meridian_constraints(p, {1.0, 0.5}));
  auto back = parse_representation(to_json(rho).dump());
  ASSERT_TRUE(std::holds_alternative<CRepresentation>(back));
  auto again = measured(std::get<CRepresentation>(back), p);
  EXPECT_LE(again.residual, 1e-9);
}

TEST(Io, RejectsMalformed) {
  EXPECT_THROW(parse_representation("not json"), ParseError);
  EXPECT_THROW(parse_representation(R"({"generators": [[1, 2, 3]]})"), ParseError);
  EXPECT_THROW(read_file("/nonexistent/file"), ParseError);
}
