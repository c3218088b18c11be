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

// Exact dense matrices over arbitrary-precision integers and rationals.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cac::exact {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}
  // Row-major literal; throws std::invalid_argument on ragged input.
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {cells_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {cells_.data() + r * cols_, cols_}; }

  const std::vector<T>& cells() const { return cells_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

// mpq_class keeps every value canonical (lowest terms, positive denominator)
// after arithmetic; values assigned from raw numerator/denominator pairs must
// go through canonicalize().
using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

// Throw std::invalid_argument on dimension mismatch.
IntMatrix mat_mul(const IntMatrix& m, const IntMatrix& n);
RatMatrix rat_mul(const RatMatrix& m, const IntMatrix& n);
RatMatrix rat_mul(const RatMatrix& m, const RatMatrix& n);

// Fraction-free (Bareiss) elimination with row pivoting.
// Throws std::invalid_argument if m is not square.
mpz_class determinant(const IntMatrix& m);

// Exact inverse via fraction-free elimination on [m | I] followed by
// fraction-free back substitution. Throws SingularMatrix if det(m) == 0.
RatMatrix inverse(const IntMatrix& m);

bool is_integral(const RatMatrix& m);
// Numerators of an all-integral matrix; nullopt if any cell has a denominator.
std::optional<IntMatrix> to_integral(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  cells_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    cells_.insert(cells_.end(), r.begin(), r.end());
  }
}

}  // namespace cac::exact
