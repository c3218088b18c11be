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

#include "cac/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "cac/errors.hpp"

namespace cac::field {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  while (n % 2 == 0) {
    out.push_back(2);
    n /= 2;
  }
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw ParamError("modulus " + std::to_string(p) + " is not an odd prime");
  }
  factors_ = factorize(p - 1);
}

std::vector<std::uint64_t> PrimeModulus::distinct_factors() const {
  std::vector<std::uint64_t> out = factors_;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Generator::Generator(std::uint64_t value, const PrimeModulus& modulus)
    : value_(value), modulus_(modulus) {
  if (value == 0 || value >= modulus.value() || !is_generator(value, modulus)) {
    throw ParamError(std::to_string(value) + " does not generate F_" +
                     std::to_string(modulus.value()) + "^*");
  }
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, const PrimeModulus& modulus) {
  const std::uint64_t p = modulus.value();
  std::uint64_t result = 1;
  base %= p;
  while (exponent != 0) {
    if (exponent & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

bool is_generator(std::uint64_t candidate, const PrimeModulus& modulus) {
  if (candidate < 1 || candidate >= modulus.value()) {
    throw ParamError("candidate " + std::to_string(candidate) + " outside [1, p-1]");
  }
  const std::uint64_t order = modulus.group_order();
  for (std::uint64_t q : modulus.distinct_factors()) {
    if (mod_pow(candidate, order / q, modulus) == 1) return false;
  }
  return true;
}

std::vector<Generator> find_generators(const PrimeModulus& modulus) {
  std::vector<Generator> out;
  const auto primes = modulus.distinct_factors();
  const std::uint64_t order = modulus.group_order();
  for (std::uint64_t g = 2; g < modulus.value(); ++g) {
    const bool generates = std::none_of(primes.begin(), primes.end(), [&](std::uint64_t q) {
      return mod_pow(g, order / q, modulus) == 1;
    });
    if (generates) out.push_back(Generator(g, modulus, Generator::Unchecked{}));
  }
  return out;
}

Generator smallest_generator(const PrimeModulus& modulus) {
  for (std::uint64_t g = 2; g < modulus.value(); ++g) {
    if (is_generator(g, modulus)) return Generator(g, modulus);
  }
  // Every cyclic group has a generator; p = 3 yields 2 above.
  throw ParamError("no generator found");
}

std::uint64_t discrete_log(const Generator& base, std::uint64_t target) {
  const PrimeModulus& modulus = base.modulus();
  const std::uint64_t p = modulus.value();
  if (target == 0 || target >= p) {
    throw ParamError("discrete log target " + std::to_string(target) + " outside [1, p-1]");
  }
  const std::uint64_t order = modulus.group_order();
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));

  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m);
  std::uint64_t power = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(power, j);
    power = mul_mod(power, base.value(), p);
  }

  // Giant step multiplies by base^(-m) = base^(order - m mod order).
  const std::uint64_t giant = mod_pow(base.value(), (order - m % order) % order, modulus);
  std::uint64_t y = target;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(y); it != baby.end()) {
      const std::uint64_t r = (i * m + it->second) % order;
      return r == 0 ? order : r;
    }
    y = mul_mod(y, giant, p);
  }
  throw ParamError("discrete log does not exist; base is not a generator");
}

}  // namespace cac::field
