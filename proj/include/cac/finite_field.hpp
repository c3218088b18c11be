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

// Arithmetic in the prime field F_p and its multiplicative group.
//
// Elements are held in 64-bit words; products go through a 128-bit
// intermediate, so any odd prime below 2^64 is representable. Primality and
// the factorization of p - 1 use trial division, which bounds practical
// moduli to roughly 2^40.

#pragma once

#include <cstdint>
#include <vector>

namespace cac::field {

class PrimeModulus {
 public:
  // Throws ParamError unless p is an odd prime.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  std::uint64_t group_order() const { return p_ - 1; }

  // Prime factors of p - 1 with multiplicity, ascending.
  const std::vector<std::uint64_t>& p_minus_1_factors() const { return factors_; }
  // Distinct prime factors of p - 1, ascending.
  std::vector<std::uint64_t> distinct_factors() const;

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> factors_;
};

// An element of order p - 1.
class Generator {
 public:
  // Throws ParamError if value is not a generator of F_p^*.
  Generator(std::uint64_t value, const PrimeModulus& modulus);

  std::uint64_t value() const { return value_; }
  const PrimeModulus& modulus() const { return modulus_; }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Unchecked {};
  Generator(std::uint64_t value, const PrimeModulus& modulus, Unchecked)
      : value_(value), modulus_(modulus) {}
  friend std::vector<Generator> find_generators(const PrimeModulus& modulus);

  std::uint64_t value_;
  PrimeModulus modulus_;
};

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending with multiplicity.
std::vector<std::uint64_t> factorize(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exponent mod p. The base may be any value; it is reduced first.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, const PrimeModulus& modulus);

// Order test: candidate^((p-1)/q) != 1 for every prime q | p - 1.
// Throws ParamError unless 1 <= candidate <= p - 1.
bool is_generator(std::uint64_t candidate, const PrimeModulus& modulus);

// All generators of F_p^*, ascending. The count is phi(p - 1).
std::vector<Generator> find_generators(const PrimeModulus& modulus);

// Smallest generator of F_p^*.
Generator smallest_generator(const PrimeModulus& modulus);

// The unique r in [1, p - 1] with base^r = target (mod p), by baby-step
// giant-step. Throws ParamError if target is 0 or >= p.
std::uint64_t discrete_log(const Generator& base, std::uint64_t target);

}  // namespace cac::field
