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

#include "cac/cyclotomy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "cac/errors.hpp"

namespace cac::cyclotomy {
namespace {

// Lift a possibly negative index (> -e after one relation) into [0, e).
std::uint32_t reduce(std::int64_t x, std::int64_t e) {
  if (x < 0) x += e;
  return static_cast<std::uint32_t>(x % e);
}

// Powers g^0 .. g^(p-2) mod p.
std::vector<std::uint64_t> power_table(const field::Generator& gamma) {
  const std::uint64_t p = gamma.modulus().value();
  std::vector<std::uint64_t> table(p - 1);
  std::uint64_t x = 1;
  for (auto& t : table) {
    t = x;
    x = field::mul_mod(x, gamma.value(), p);
  }
  return table;
}

std::uint64_t count_from_table(IndexPair pair, const std::vector<std::uint64_t>& powers,
                               const CyclotomyParams& params) {
  const std::uint64_t e = params.e();
  const std::uint64_t k = params.k();
  const std::uint64_t p = params.p();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < k; ++s) {
    const std::uint64_t x = (powers[e * s + pair.a] + 1) % p;
    for (std::uint64_t t = 0; t < k; ++t) {
      if (x == powers[e * t + pair.b]) ++count;
    }
  }
  return count;
}

void check_generator(const field::Generator& gamma, const CyclotomyParams& params) {
  if (!(gamma.modulus() == params.modulus())) {
    throw ParamError("generator belongs to a different modulus");
  }
}

}  // namespace

CyclotomyParams::CyclotomyParams(std::uint64_t l, field::PrimeModulus p)
    : l_(l), e_(2 * l * l), p_(std::move(p)), k_((p_.value() - 1) / e_) {}

CyclotomyParams make_params(std::uint64_t l, std::uint64_t p) {
  if (!field::is_prime(l)) throw ParamError("l = " + std::to_string(l) + " is not prime");
  if (l > 46340) throw ParamError("l = " + std::to_string(l) + " is too large");
  field::PrimeModulus modulus(p);
  const std::uint64_t e = 2 * l * l;
  if ((p - 1) % e != 0) {
    throw ParamError("p - 1 = " + std::to_string(p - 1) + " is not divisible by 2l^2 = " +
                     std::to_string(e));
  }
  return CyclotomyParams(l, std::move(modulus));
}

std::string to_string(IndexPair pair) {
  return std::to_string(pair.a) + ":" + std::to_string(pair.b);
}

std::size_t RepTable::distinct_count() const {
  std::set<IndexPair> seen(entries.cells().begin(), entries.cells().end());
  return seen.size();
}

exact::IntMatrix CycMatrix::to_int_matrix() const {
  const std::size_t n = values.order();
  exact::IntMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out(a, b) = static_cast<unsigned long>(values(a, b));
  }
  return out;
}

std::vector<IndexPair> relation_images(IndexPair pair, const CyclotomyParams& params) {
  const auto e = static_cast<std::int64_t>(params.e());
  const std::int64_t a = pair.a;
  const std::int64_t b = pair.b;
  auto make = [e](std::int64_t x, std::int64_t y) { return IndexPair{reduce(x, e), reduce(y, e)}; };
  if (params.k_even()) {
    return {make(a, b),      make(b, a),      make(a - b, -b),
            make(b - a, -a), make(-a, b - a), make(-b, a - b)};
  }
  const auto h = static_cast<std::int64_t>(params.l_squared());
  return {make(a, b),          make(b + h, a + h), make(h + a - b, -b),
          make(h + b - a, h - a), make(-a, b - a),    make(h - b, a - b)};
}

std::vector<IndexPair> orbit(IndexPair pair, const CyclotomyParams& params) {
  std::set<IndexPair> seen{pair};
  std::vector<IndexPair> frontier{pair};
  while (!frontier.empty()) {
    const IndexPair next = frontier.back();
    frontier.pop_back();
    for (const IndexPair& image : relation_images(next, params)) {
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

IndexPair canonical_rep(IndexPair pair, const CyclotomyParams& params) {
  return orbit(pair, params).front();
}

RepTable equality_table(const CyclotomyParams& params) {
  const std::size_t e = params.e();
  RepTable table{Grid<IndexPair>(e)};
  std::vector<bool> assigned(e * e, false);
  // Row-major sweep: the first unassigned pair of each orbit is not
  // necessarily its minimum, so take the orbit's front explicitly.
  for (std::uint32_t a = 0; a < e; ++a) {
    for (std::uint32_t b = 0; b < e; ++b) {
      if (assigned[a * e + b]) continue;
      const auto members = orbit({a, b}, params);
      for (const IndexPair& m : members) {
        table.entries(m.a, m.b) = members.front();
        assigned[m.a * e + m.b] = true;
      }
    }
  }
  return table;
}

std::uint64_t class_count(const CyclotomyParams& params) {
  const std::uint64_t e = params.e();
  return e + ((e - 1) * (e - 2) + 5) / 6;
}

std::uint64_t cyclotomic_number(IndexPair pair, const field::Generator& gamma,
                                const CyclotomyParams& params) {
  check_generator(gamma, params);
  const std::uint64_t e = params.e();
  const std::uint64_t p = params.p();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < params.k(); ++s) {
    for (std::uint64_t t = 0; t < params.k(); ++t) {
      const std::uint64_t x = field::mod_pow(gamma.value(), e * s + pair.a, params.modulus());
      const std::uint64_t y = field::mod_pow(gamma.value(), e * t + pair.b, params.modulus());
      if ((x + 1) % p == y) ++count;
    }
  }
  return count;
}

CycMatrix cyclotomic_matrix(const field::Generator& gamma, const CyclotomyParams& params,
                            BuildStats* stats, unsigned threads) {
  check_generator(gamma, params);
  const std::size_t e = params.e();
  const auto powers = power_table(gamma);
  const RepTable table = equality_table(params);

  std::vector<IndexPair> reps;
  std::map<IndexPair, std::size_t> slot;
  for (const IndexPair& r : table.entries.cells()) {
    if (slot.emplace(r, reps.size()).second) reps.push_back(r);
  }

  std::vector<std::uint64_t> counts(reps.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, reps.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < reps.size(); ++i) counts[i] = count_from_table(reps[i], powers, params);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < reps.size(); i += threads) {
          counts[i] = count_from_table(reps[i], powers, params);
        }
      });
    }
  }

  CycMatrix out{Grid<std::uint64_t>(e), gamma.value()};
  for (std::size_t a = 0; a < e; ++a) {
    for (std::size_t b = 0; b < e; ++b) out.values(a, b) = counts[slot.at(table.entries(a, b))];
  }
  if (stats != nullptr) stats->evaluations += reps.size();
  return out;
}

CycMatrix naive_cyclotomic_matrix(const field::Generator& gamma, const CyclotomyParams& params,
                                  BuildStats* stats) {
  check_generator(gamma, params);
  const std::uint32_t e = static_cast<std::uint32_t>(params.e());
  const auto powers = power_table(gamma);
  CycMatrix out{Grid<std::uint64_t>(e), gamma.value()};
  for (std::uint32_t a = 0; a < e; ++a) {
    for (std::uint32_t b = 0; b < e; ++b) out.values(a, b) = count_from_table({a, b}, powers, params);
  }
  if (stats != nullptr) stats->evaluations += static_cast<std::uint64_t>(e) * e;
  return out;
}

std::uint64_t row_deficit(std::uint64_t a, const CyclotomyParams& params) {
  if (params.k_even()) return a == 0 ? 1 : 0;
  return a == params.l_squared() ? 1 : 0;
}

namespace {

template <typename T, typename Render>
std::string grid_csv(const Grid<T>& grid, Render render) {
  std::ostringstream out;
  for (std::size_t a = 0; a < grid.order(); ++a) {
    for (std::size_t b = 0; b < grid.order(); ++b) {
      if (b != 0) out << ',';
      out << render(grid(a, b));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string to_csv(const RepTable& table) {
  return grid_csv(table.entries, [](IndexPair p) { return to_string(p); });
}

std::string to_csv(const CycMatrix& matrix) {
  return grid_csv(matrix.values, [](std::uint64_t v) { return std::to_string(v); });
}

}  // namespace cac::cyclotomy
