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

// Cyclotomic numbers of order e = 2l^2 over F_p, p = e k + 1.
//
// The cyclotomic number (a,b) for a generator g counts pairs (s,t) in
// [0,k)^2 with 1 + g^(es+a) = g^(et+b) (mod p). When k is even, -1 is an
// e-th power and this is the same count as g^(es+a) + g^(et+b) + 1 = 0; when
// k is odd the two differ by a shift of l^2 in b, and only the form used
// here obeys the odd-k relations below. Index pairs related by the
// symmetries always carry equal counts, so a full e x e matrix needs only
// one evaluation per orbit.
//
//   k even: (a,b) = (b,a) = (a-b,-b) = (b-a,-a) = (-a,b-a) = (-b,a-b)
//   k odd:  (a,b) = (b+l^2,a+l^2) = (l^2+a-b,-b) = (l^2+b-a,l^2-a)
//                 = (-a,b-a) = (l^2-b,a-b)

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cac/exact_matrix.hpp"
#include "cac/finite_field.hpp"

namespace cac::cyclotomy {

class CyclotomyParams {
 public:
  std::uint64_t l() const { return l_; }
  std::uint64_t e() const { return e_; }
  std::uint64_t k() const { return k_; }
  std::uint64_t l_squared() const { return l_ * l_; }
  const field::PrimeModulus& modulus() const { return p_; }
  std::uint64_t p() const { return p_.value(); }
  bool k_even() const { return k_ % 2 == 0; }

 private:
  CyclotomyParams(std::uint64_t l, field::PrimeModulus p);
  friend CyclotomyParams make_params(std::uint64_t l, std::uint64_t p);

  std::uint64_t l_;
  std::uint64_t e_;
  field::PrimeModulus p_;
  std::uint64_t k_;
};

// Throws ParamError if l or p is not prime or 2l^2 does not divide p - 1.
// l = 2 is accepted.
CyclotomyParams make_params(std::uint64_t l, std::uint64_t p);

struct IndexPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(IndexPair pair);

// e x e grid, row-major.
template <typename T>
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::size_t order) : order_(order), cells_(order * order) {}

  std::size_t order() const { return order_; }
  T& operator()(std::size_t a, std::size_t b) { return cells_[a * order_ + b]; }
  const T& operator()(std::size_t a, std::size_t b) const { return cells_[a * order_ + b]; }
  const std::vector<T>& cells() const { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> cells_;
};

// Canonical representative of every index pair.
struct RepTable {
  Grid<IndexPair> entries;
  std::size_t distinct_count() const;
};

struct CycMatrix {
  Grid<std::uint64_t> values;
  std::uint64_t generator = 0;

  exact::IntMatrix to_int_matrix() const;
};

// Cyclotomic-number evaluations performed while building a matrix.
struct BuildStats {
  std::uint64_t evaluations = 0;
};

// The six images of `pair` under the symmetry relations, reduced mod e.
// Index 0 is the pair itself.
std::vector<IndexPair> relation_images(IndexPair pair, const CyclotomyParams& params);

// Closure of {pair} under the symmetry relations, ascending.
std::vector<IndexPair> orbit(IndexPair pair, const CyclotomyParams& params);

// Lexicographically smallest element of the orbit.
IndexPair canonical_rep(IndexPair pair, const CyclotomyParams& params);

RepTable equality_table(const CyclotomyParams& params);

// e + ceil((e-1)(e-2)/6); equals the number of orbits.
std::uint64_t class_count(const CyclotomyParams& params);

// Direct count over (s,t) with mod_pow at every term.
std::uint64_t cyclotomic_number(IndexPair pair, const field::Generator& gamma,
                                const CyclotomyParams& params);

// Evaluates one count per canonical representative and broadcasts it over the
// orbit. Representatives are evaluated on up to `threads` worker threads
// (0 = hardware concurrency); the result does not depend on the thread count.
CycMatrix cyclotomic_matrix(const field::Generator& gamma, const CyclotomyParams& params,
                            BuildStats* stats = nullptr, unsigned threads = 1);

// Evaluates every one of the e^2 positions.
CycMatrix naive_cyclotomic_matrix(const field::Generator& gamma, const CyclotomyParams& params,
                                  BuildStats* stats = nullptr);

// n_a for the row-sum identity: 1 if (a = 0, k even) or (a = l^2, k odd).
std::uint64_t row_deficit(std::uint64_t a, const CyclotomyParams& params);

// CSV, one row per line. Representative cells render as "a:b".
std::string to_csv(const RepTable& table);
std::string to_csv(const CycMatrix& matrix);

}  // namespace cac::cyclotomy
