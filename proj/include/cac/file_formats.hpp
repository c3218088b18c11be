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

// JSON key and ciphertext files, and table/matrix exports.
//
// Every integer is written as a decimal string. Objects are emitted with
// sorted keys and two-space indentation, so write -> read -> write is
// byte-identical.
//
//   public key:  {"gamma_prime", "l", "p", "role": "public", "version": 1}
//   secret key:  public fields plus "gamma_double_prime", "r0";
//                "role": "secret"
//   ciphertext:  {"blocks": [[[cell, ...], ...], ...], "gamma_prime", "l",
//                 "p", "version": 1}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cac/cryptosystem.hpp"
#include "cac/cyclotomy.hpp"

namespace cac::io {

inline constexpr int kFormatVersion = 1;

std::string write_public_key(const crypto::PublicKey& pk);
std::string write_secret_key(const crypto::SecretKey& sk);

// Re-validate all key constraints. Malformed JSON or fields raise
// FormatError; invalid parameters raise ParamError; a secret key whose r0
// does not map g'' to the recorded g' raises IntegrityError.
crypto::PublicKey read_public_key(const std::string& text);
crypto::SecretKey read_secret_key(const std::string& text);

struct CipherFile {
  std::uint64_t p = 0;
  std::uint64_t l = 0;
  std::uint64_t gamma_prime = 0;
  std::vector<crypto::CipherBlock> blocks;
};

std::string write_cipher_file(const CipherFile& file);
// Blocks must be square of order 2l^2 with non-negative cells.
CipherFile read_cipher_file(const std::string& text);

// Table exports: {"e", "k", "kind", "l", "p", "rows"} plus "generator" for
// numeric matrices. kind is "representatives" or "matrix".
std::string table_json(const cyclotomy::RepTable& table, const cyclotomy::CyclotomyParams& params);
std::string matrix_json(const cyclotomy::CycMatrix& matrix, const cyclotomy::CyclotomyParams& params);

// FNV-1a 64 of the serialized public key, 16 hex digits.
std::string fingerprint(const crypto::PublicKey& pk);

std::uint64_t parse_decimal(const std::string& text, const char* field);

}  // namespace cac::io
