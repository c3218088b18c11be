/*
 * Copyright 2026 The cac Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cac/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "cac/errors.hpp"

namespace cac::exact {
namespace {

template <typename L, typename R>
auto multiply(const Matrix<L>& m, const Matrix<R>& n) {
  if (m.cols() != n.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<L> out(m.rows(), n.cols());
  L acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n.cols(); ++j) {
      acc = 0;
      for (std::size_t t = 0; t < m.cols(); ++t) {
        if (sgn(m(i, t)) != 0 && sgn(n(t, j)) != 0) acc += m(i, t) * n(t, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  auto x = a.row(r1);
  auto y = a.row(r2);
  for (std::size_t j = 0; j < x.size(); ++j) std::swap(x[j], y[j]);
}

// In-place Bareiss forward elimination on the first `pivot_cols` columns.
// Returns false if a zero pivot column is met (the leading block is
// singular); `swaps` counts row exchanges.
bool bareiss_forward(IntMatrix& a, std::size_t pivot_cols, int& swaps) {
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < pivot_cols; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t i = k + 1;
      while (i < a.rows() && sgn(a(i, k)) == 0) ++i;
      if (i == a.rows()) return false;
      swap_rows(a, k, i);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < a.rows(); ++i) {
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        tmp = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

}  // namespace

IntMatrix mat_mul(const IntMatrix& m, const IntMatrix& n) { return multiply(m, n); }

RatMatrix rat_mul(const RatMatrix& m, const IntMatrix& n) { return multiply(m, n); }

RatMatrix rat_mul(const RatMatrix& m, const RatMatrix& n) { return multiply(m, n); }

mpz_class determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int swaps = 0;
  if (!bareiss_forward(a, a.rows(), swaps)) return 0;
  mpz_class det = a(a.rows() - 1, a.rows() - 1);
  return swaps % 2 == 0 ? det : mpz_class(-det);
}

RatMatrix inverse(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  int swaps = 0;
  if (n == 0) return RatMatrix(0, 0);
  if (!bareiss_forward(a, n, swaps) || sgn(a(n - 1, n - 1)) == 0) {
    throw SingularMatrix("matrix is singular");
  }

  // d * m^-1 is +-adj(m), so every quotient below is exact.
  const mpz_class d = a(n - 1, n - 1);
  IntMatrix scaled(n, n);
  mpz_class acc;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      acc = d * a(i, n + c);
      for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * scaled(j, c);
      if (!mpz_divisible_p(acc.get_mpz_t(), a(i, i).get_mpz_t())) {
        throw std::logic_error("inexact fraction-free back substitution");
      }
      mpz_divexact(scaled(i, c).get_mpz_t(), acc.get_mpz_t(), a(i, i).get_mpz_t());
    }
  }

  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = mpq_class(scaled(i, j), d);
      out(i, j).canonicalize();
    }
  }
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.cells()) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

std::optional<IntMatrix> to_integral(const RatMatrix& m) {
  if (!is_integral(m)) return std::nullopt;
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num();
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

}  // namespace cac::exact
