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

#include "cac/file_formats.hpp"

#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "cac/errors.hpp"

namespace cac::io {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string str(std::uint64_t v) { return std::to_string(v); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field ") + name);
  return j.at(name);
}

std::uint64_t decimal_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw FormatError(std::string(name) + " must be a decimal string");
  return parse_decimal(v.get<std::string>(), name);
}

void check_header(const json& j, const char* role) {
  const json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    throw FormatError("unsupported format version");
  }
  if (role != nullptr) {
    const json& r = field(j, "role");
    if (!r.is_string() || r.get<std::string>() != role) {
      throw FormatError(std::string("expected a ") + role + " key");
    }
  }
}

json public_fields(const cyclotomy::CyclotomyParams& params, std::uint64_t gamma_prime) {
  return json{{"version", kFormatVersion},
              {"p", str(params.p())},
              {"l", str(params.l())},
              {"gamma_prime", str(gamma_prime)}};
}

}  // namespace

std::uint64_t parse_decimal(const std::string& text, const char* name) {
  std::uint64_t out = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (text.empty() || text.size() > 20 || (text.size() > 1 && text[0] == '0')) {
    throw FormatError(std::string(name) + ": not a canonical decimal integer");
  }
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw FormatError(std::string(name) + ": not a canonical decimal integer");
  }
  return out;
}

std::string write_public_key(const crypto::PublicKey& pk) {
  json j = public_fields(pk.params(), pk.gamma_prime().value());
  j["role"] = "public";
  return dump(j);
}

std::string write_secret_key(const crypto::SecretKey& sk) {
  json j = public_fields(sk.params(), sk.paired_gamma_prime());
  j["role"] = "secret";
  j["gamma_double_prime"] = str(sk.gamma_double_prime().value());
  j["r0"] = str(sk.r0());
  return dump(j);
}

crypto::PublicKey read_public_key(const std::string& text) {
  const json j = parse(text);
  check_header(j, "public");
  auto params = cyclotomy::make_params(decimal_field(j, "l"), decimal_field(j, "p"));
  field::Generator gamma(decimal_field(j, "gamma_prime"), params.modulus());
  return crypto::PublicKey(std::move(params), std::move(gamma));
}

crypto::SecretKey read_secret_key(const std::string& text) {
  const json j = parse(text);
  check_header(j, "secret");
  auto params = cyclotomy::make_params(decimal_field(j, "l"), decimal_field(j, "p"));
  field::Generator gamma_prime(decimal_field(j, "gamma_prime"), params.modulus());
  field::Generator gamma_double_prime(decimal_field(j, "gamma_double_prime"), params.modulus());
  const std::uint64_t r0 = decimal_field(j, "r0");
  if (gamma_prime == gamma_double_prime) throw ParamError("generators must differ");
  if (field::discrete_log(gamma_double_prime, gamma_prime.value()) != r0) {
    throw IntegrityError("r0 does not map gamma_double_prime to gamma_prime");
  }
  return crypto::SecretKey(std::move(params), std::move(gamma_double_prime), r0);
}

std::string write_cipher_file(const CipherFile& file) {
  json blocks = json::array();
  for (const auto& block : file.blocks) {
    const auto& m = block.matrix();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (const auto& x : m.row(i)) row.push_back(x.get_str());
      rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(rows));
  }
  json j{{"version", kFormatVersion},
         {"p", str(file.p)},
         {"l", str(file.l)},
         {"gamma_prime", str(file.gamma_prime)},
         {"blocks", std::move(blocks)}};
  return dump(j);
}

CipherFile read_cipher_file(const std::string& text) {
  const json j = parse(text);
  check_header(j, nullptr);
  CipherFile out;
  out.p = decimal_field(j, "p");
  out.l = decimal_field(j, "l");
  out.gamma_prime = decimal_field(j, "gamma_prime");
  if (out.l > 46340) throw FormatError("l out of range");
  const std::size_t e = 2 * out.l * out.l;
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw FormatError("blocks must be an array");
  for (const json& rows : blocks) {
    if (!rows.is_array() || rows.size() != e) throw FormatError("block is not of order 2l^2");
    exact::IntMatrix m(e, e);
    for (std::size_t i = 0; i < e; ++i) {
      const json& row = rows[i];
      if (!row.is_array() || row.size() != e) throw FormatError("block is not of order 2l^2");
      for (std::size_t c = 0; c < e; ++c) {
        if (!row[c].is_string()) throw FormatError("cipher cells must be decimal strings");
        const std::string cell = row[c].get<std::string>();
        if (cell.empty() || cell.size() > 4096 ||
            cell.find_first_not_of("0123456789") != std::string::npos ||
            (cell.size() > 1 && cell[0] == '0')) {
          throw FormatError("cipher cell is not a non-negative decimal integer");
        }
        m(i, c) = mpz_class(cell, 10);
      }
    }
    out.blocks.emplace_back(std::move(m));
  }
  return out;
}

std::string table_json(const cyclotomy::RepTable& table, const cyclotomy::CyclotomyParams& params) {
  json rows = json::array();
  const auto& grid = table.entries;
  for (std::size_t a = 0; a < grid.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < grid.order(); ++b) row.push_back(cyclotomy::to_string(grid(a, b)));
    rows.push_back(std::move(row));
  }
  json j{{"kind", "representatives"}, {"l", str(params.l())}, {"p", str(params.p())},
         {"e", str(params.e())},      {"k", str(params.k())}, {"rows", std::move(rows)}};
  return dump(j);
}

std::string matrix_json(const cyclotomy::CycMatrix& matrix, const cyclotomy::CyclotomyParams& params) {
  json rows = json::array();
  const auto& grid = matrix.values;
  for (std::size_t a = 0; a < grid.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < grid.order(); ++b) row.push_back(str(grid(a, b)));
    rows.push_back(std::move(row));
  }
  json j{{"kind", "matrix"},
         {"l", str(params.l())},
         {"p", str(params.p())},
         {"e", str(params.e())},
         {"k", str(params.k())},
         {"generator", str(matrix.generator)},
         {"rows", std::move(rows)}};
  return dump(j);
}

std::string fingerprint(const crypto::PublicKey& pk) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_public_key(pk)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cac::io
