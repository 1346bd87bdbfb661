#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace talex;

TEST(Roots, PlantedComplexRoots) {
  const std::vector<Complex> planted{{1.5, 0.5}, {-0.7, 0.0}, {0.0, 2.0}, {3.0, -1.0}};
  CLaurent p = CLaurent::constant(1);
  for (Complex r : planted) p = p * (CLaurent::t() - CLaurent::constant(1) * r);
  auto roots = complex_roots(p);
  ASSERT_EQ(roots.size(), planted.size());
  for (Complex r : planted) {
    double best = 1e9;
    for (const auto& f : roots) best = std::min(best, std::abs(f.value - r));
    EXPECT_LT(best, 1e-9);
  }
}

TEST(Roots, ExactMultiplicities) {
  QLaurent f = parse_laurent("(t^2 - t + 1)^3 * (t - 2)");
  auto roots = complex_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  int total = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    EXPECT_LT(std::abs(f.evaluate_complex(r.value)), 1e-8);
  }
  EXPECT_EQ(total, 7);
}

TEST(Roots, SimpleRootPredicate) {
  EXPECT_TRUE(has_simple_root(parse_laurent("7*t^2 - 13*t + 7")).has_simple_root);
  EXPECT_TRUE(has_simple_root(parse_laurent("t^2 - t + 1")).has_simple_root);
  EXPECT_FALSE(has_simple_root(parse_laurent("(t^2 - t + 1)^2")).has_simple_root);
  EXPECT_TRUE(has_simple_root(parse_laurent("(t^2 - t + 1)^2 * (t^2 - 3*t + 1)")).has_simple_root);
}

// Every polynomial in the fixture table has only repeated roots.
TEST(Roots, AlexanderTableHasNoSimpleRoots) {
  std::istringstream in(oracle::fixture("alexander_table.txt"));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string knot;
    ls >> knot;
    std::string poly;
    std::getline(ls, poly);
    QLaurent d = parse_laurent(poly);
    EXPECT_FALSE(has_simple_root(d).has_simple_root) << knot;
    EXPECT_EQ(abs(d.evaluate<Rational>(Rational(1))), 1) << knot;
    ++rows;
  }
  EXPECT_EQ(rows, 7);
}
