#pragma once

// Reference computations used as independent oracles by the tests. They are
// deliberately naive: cofactor expansion, pointwise evaluation, brute-force
// products.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "talex/talex.hpp"

namespace oracle {

using talex::Complex;
using talex::QLaurent;
using talex::Rational;

inline std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline talex::Presentation fixture_presentation(const std::string& knot) {
  if (knot == "8_20") return talex::pd_to_wirtinger(talex::parse_pd(fixture("8_20.pd")));
  return talex::parse_presentation(fixture(knot + ".pres"));
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline QLaurent random_laurent(std::mt19937_64& rng, int low, int high) {
  QLaurent p;
  for (int e = low; e <= high; ++e) p.add_term(e, random_rational(rng));
  return p;
}

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T total = zero;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    T term = m[0][j] * cofactor_det(minor, zero, one);
    if (j % 2 == 0)
      total = total + term;
    else
      total = total - term;
  }
  return total;
}

inline talex::FreeWord random_word(std::mt19937_64& rng, int generators, int length) {
  std::uniform_int_distribution<int> gen(0, generators - 1), sign(0, 1);
  talex::FreeWord w;
  for (int i = 0; i < length; ++i) w.push({gen(rng), sign(rng) ? 1 : -1});
  return w;
}

// Wada invariant evaluated at a complex point t straight from the
// definition: the Fox matrix with generator k removed, every entry mapped to
// sum c_w t^{alpha(w)} rho(w), determinant by cofactor expansion.
inline Complex wada_at(const talex::Presentation& p, const talex::CRepresentation& rho, int k, Complex t) {
  const int n = p.generator_count();
  std::vector<std::vector<Complex>> m(static_cast<std::size_t>(2 * (n - 1)), std::vector<Complex>(static_cast<std::size_t>(2 * (n - 1))));
  for (int i = 0; i < n - 1; ++i) {
    int col = 0;
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      talex::CMat2 block{};
      const auto d = talex::fox_derivative(p.relators[static_cast<std::size_t>(i)], j);
      for (const auto& [w, c] : d.terms()) {
        block = block + (static_cast<double>(c) * std::pow(t, talex::abelianization_exponent(w))) * talex::image_of(rho, w);
      }
      const auto r = static_cast<std::size_t>(2 * i), c0 = static_cast<std::size_t>(2 * col);
      m[r][c0] = block.a;
      m[r][c0 + 1] = block.b;
      m[r + 1][c0] = block.c;
      m[r + 1][c0 + 1] = block.d;
      ++col;
    }
  }
  const talex::CMat2 g = rho.images[static_cast<std::size_t>(k)];
  const talex::CMat2 den = t * g - talex::CMat2::identity();
  return cofactor_det(m, Complex{}, Complex(1.0)) / den.det();
}

inline talex::CRepresentation to_complex_rep(const talex::Representation<Rational>& rho) {
  talex::CRepresentation c;
  for (const auto& m : rho.images) c.images.push_back(talex::to_complex(m));
  return c;
}

}  // namespace oracle
