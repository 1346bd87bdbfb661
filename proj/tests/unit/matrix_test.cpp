#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace talex;

TEST(Matrix, BareissMatchesCofactorOnRationals) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
      for (auto& r : rows)
        for (auto& x : r) x = oracle::random_rational(rng, 4);
      if (trial % 3 == 0) rows[n - 1] = rows[0];  // singular case
      EXPECT_EQ(det(SquareMatrix<Rational>(rows)), oracle::cofactor_det(rows, Rational(0), Rational(1)));
    }
  }
}

TEST(Matrix, BareissMatchesCofactorOnLaurent) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::vector<QLaurent>> rows(n, std::vector<QLaurent>(n));
    for (auto& r : rows)
      for (auto& x : r) x = oracle::random_laurent(rng, -1, 1);
    EXPECT_EQ(det(SquareMatrix<QLaurent>(rows)), oracle::cofactor_det(rows, QLaurent{}, QLaurent::constant(1)));
  }
}

TEST(Matrix, ZeroPivotNeedsRowSwap) {
  SquareMatrix<Rational> m({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  EXPECT_EQ(det(m), -1);
}

// Interpolated complex Laurent determinant agrees with pointwise cofactor
// determinants.
TEST(Matrix, ComplexLaurentDeterminantPointwise) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  const std::size_t n = 4;
  std::vector<std::vector<CLaurent>> rows(n, std::vector<CLaurent>(n));
  for (auto& r : rows)
    for (auto& x : r)
      for (int e = -1; e <= 1; ++e) x.add_term(e, {u(rng), u(rng)});
  CLaurent d = det(SquareMatrix<CLaurent>(rows));
  for (Complex t : {Complex(0.3, 0.8), Complex(-1.2, 0.1), Complex(2.0, -0.5)}) {
    std::vector<std::vector<Complex>> pt(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pt[i][j] = rows[i][j].evaluate_complex(t);
    Complex expect = oracle::cofactor_det(pt, Complex{}, Complex(1.0));
    EXPECT_LT(std::abs(d.evaluate_complex(t) - expect), 1e-9 * std::max(1.0, std::abs(expect)));
  }
}
