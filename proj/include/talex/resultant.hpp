#pragma once

#include <string>

#include "talex/errors.hpp"
#include "talex/matrix.hpp"
#include "talex/multipoly.hpp"

namespace talex {

// Sylvester matrix of p and q with respect to `var`; entries are polynomials
// in the remaining variables (kept in the same ring).
inline SquareMatrix<MultiPoly> sylvester_matrix(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  const int m = p.degree_in(var), n = q.degree_in(var);
  if (m <= 0 || n <= 0) {
    throw MathError("degree_zero", "resultant needs positive degree in '" + var + "' for both arguments");
  }
  auto pc = p.coefficients_in(var), qc = q.coefficients_in(var);
  const auto size = static_cast<std::size_t>(m + n);
  SquareMatrix<MultiPoly> s(size, MultiPoly(p.vars()));
  // Row i holds the coefficients of var^(n-1-i) * p, highest power first.
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = pc[static_cast<std::size_t>(m - k)];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) {
      s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = qc[static_cast<std::size_t>(n - k)];
    }
  }
  return s;
}

// Res_var(p, q) as a polynomial in the remaining variables, via the Sylvester
// determinant computed by fraction-free elimination.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  if (p.vars() != q.vars()) throw MathError("ring_mismatch", "polynomials live in different rings");
  if (!p.is_polynomial() || !q.is_polynomial()) throw MathError("not_polynomial", "resultant needs polynomials");
  return det(sylvester_matrix(p, q, var));
}

}  // namespace talex
