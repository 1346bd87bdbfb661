#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace talex;

namespace {

GroupRingElement element(const FreeWord& w) { return GroupRingElement(w); }

// sum_j (d w / d x_j)(x_j - 1)
GroupRingElement fundamental_lhs(const FreeWord& w, int generators) {
  GroupRingElement total;
  for (int j = 0; j < generators; ++j) {
    total += fox_derivative(w, j) * (element(FreeWord::generator(j)) - GroupRingElement::one());
  }
  return total;
}

}  // namespace

TEST(FreeWord, FreeReduction) {
  const std::vector<std::string> names{"a", "b"};
  EXPECT_TRUE(parse_word("aA", names).empty());
  EXPECT_EQ(parse_word("abBa", names).to_string(names), "aa");
  FreeWord w = parse_word("abAB", names);
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(abelianization_exponent(parse_word("aaB", names)), 1);
}

TEST(Fox, BasicDerivatives) {
  const std::vector<std::string> names{"a", "b"};
  EXPECT_EQ(fox_derivative(parse_word("a", names), 0), GroupRingElement::one());
  EXPECT_EQ(fox_derivative(parse_word("A", names), 0), GroupRingElement() - element(parse_word("A", names)));
  EXPECT_EQ(fox_derivative(parse_word("b", names), 0), GroupRingElement());
}

TEST(Fox, FundamentalIdentityOnRandomWords) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    FreeWord w = oracle::random_word(rng, 3, 1 + trial % 15);
    EXPECT_EQ(fundamental_lhs(w, 3), element(w) - GroupRingElement::one()) << w.to_string();
  }
}

TEST(Fox, ProductRule) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    FreeWord u = oracle::random_word(rng, 3, 6), v = oracle::random_word(rng, 3, 6);
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(fox_derivative(u * v, j), fox_derivative(u, j) + element(u) * fox_derivative(v, j));
    }
  }
}

TEST(Fox, FundamentalIdentityOnFixtureRelators) {
  for (const char* knot : {"3_1", "9_35", "8_20"}) {
    auto p = oracle::fixture_presentation(knot);
    for (const auto& r : p.relators) EXPECT_EQ(fundamental_lhs(r, p.generator_count()), element(r) - GroupRingElement::one()) << knot;
  }
}
