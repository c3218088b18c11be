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

// Cyclotomic asymmetric cryptosystem.
//
// The public key is a generator g' of F_p^* (with p and l); the public
// matrix B is its e x e cyclotomic matrix and a plaintext block A encrypts
// to C = B A. The secret key is a second generator g'' and r0 with
// g''^r0 = g'. Multiplying every index of the equality table by r0 and
// reading the counts of g'' reproduces B, whose exact inverse Z recovers
// A = Z C.
//
// The map A -> B A is linear and B is computable from public data, so
// break_ciphertext() decrypts without the secret key. This library exists
// to study the construction, not to protect data.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cac/cyclotomy.hpp"
#include "cac/exact_matrix.hpp"
#include "cac/finite_field.hpp"

namespace cac::crypto {

class PublicKey {
 public:
  // Builds the public matrix and rejects it if singular (SingularMatrix).
  PublicKey(cyclotomy::CyclotomyParams params, field::Generator gamma_prime);

  const cyclotomy::CyclotomyParams& params() const { return params_; }
  const field::Generator& gamma_prime() const { return gamma_prime_; }
  const cyclotomy::CycMatrix& matrix() const { return matrix_; }
  const exact::IntMatrix& int_matrix() const { return int_matrix_; }

 private:
  cyclotomy::CyclotomyParams params_;
  field::Generator gamma_prime_;
  cyclotomy::CycMatrix matrix_;
  exact::IntMatrix int_matrix_;
};

class SecretKey {
 public:
  // Throws ParamError unless 1 <= r0 <= p-1 and g''^r0 != g''.
  SecretKey(cyclotomy::CyclotomyParams params, field::Generator gamma_double_prime, std::uint64_t r0);

  const cyclotomy::CyclotomyParams& params() const { return params_; }
  const field::Generator& gamma_double_prime() const { return gamma_double_prime_; }
  std::uint64_t r0() const { return r0_; }
  // g''^r0 mod p.
  std::uint64_t paired_gamma_prime() const;

 private:
  cyclotomy::CyclotomyParams params_;
  field::Generator gamma_double_prime_;
  std::uint64_t r0_;
};

struct KeyPair {
  PublicKey public_key;
  SecretKey secret_key;
};

struct ExpandedKey {
  exact::RatMatrix z_matrix;
  cyclotomy::CyclotomyParams params;
};

// Square block of order e with entries in [0, 255].
class MessageBlock {
 public:
  // Throws FormatError on a non-square matrix or an out-of-range cell.
  explicit MessageBlock(exact::IntMatrix matrix);
  const exact::IntMatrix& matrix() const { return matrix_; }
  friend bool operator==(const MessageBlock&, const MessageBlock&) = default;

 private:
  exact::IntMatrix matrix_;
};

// Square block of order e with non-negative entries.
class CipherBlock {
 public:
  // Throws FormatError on a non-square matrix or a negative cell.
  explicit CipherBlock(exact::IntMatrix matrix);
  const exact::IntMatrix& matrix() const { return matrix_; }
  friend bool operator==(const CipherBlock&, const CipherBlock&) = default;

 private:
  exact::IntMatrix matrix_;
};

// Builds a key pair from explicit generators; r0 = log_{g''}(g').
// Throws ParamError if k = 1 or the generators coincide.
KeyPair make_keypair(const cyclotomy::CyclotomyParams& params, const field::Generator& gamma_prime,
                     const field::Generator& gamma_double_prime);

// Seed-deterministic key generation. The generator list is shuffled with
// mt19937_64(seed); g'' is the first entry and g' the next one whose matrix
// is non-singular, trying at most `max_attempts` candidates.
// Throws ParamError (invalid params, k = 1) or SingularMatrix (budget spent).
KeyPair keygen(std::uint64_t l, std::uint64_t p, std::uint64_t seed, int max_attempts = 8);

// 8-byte big-endian length, payload, zero padding to a multiple of e^2,
// split row-major into e x e blocks.
std::vector<MessageBlock> encode_message(std::span<const std::uint8_t> data,
                                         const cyclotomy::CyclotomyParams& params);
// Throws FormatError if the header disagrees with the block count.
std::vector<std::uint8_t> decode_message(std::span<const MessageBlock> blocks);

// Exactly e^2 bytes as one block, no header.
MessageBlock raw_block(std::span<const std::uint8_t> bytes, const cyclotomy::CyclotomyParams& params);
std::vector<std::uint8_t> raw_bytes(const MessageBlock& block);

CipherBlock encrypt(const PublicKey& pk, const MessageBlock& block);

// Equality table with both indices of every entry multiplied by r0 and
// canonicalized: the symbolic form of the public matrix.
cyclotomy::RepTable scaled_rep_table(const cyclotomy::RepTable& table, std::uint64_t r0,
                                     const cyclotomy::CyclotomyParams& params);

// Replaces every symbolic entry by its count in `values`.
exact::IntMatrix substitute(const cyclotomy::RepTable& symbolic, const cyclotomy::CycMatrix& values);

// Public matrix rebuilt from (g'', r0), before inversion.
exact::IntMatrix reconstruct_public_matrix(const SecretKey& sk);

// Throws SingularMatrix if the reconstructed matrix is singular.
ExpandedKey expand_secret(const SecretKey& sk);

// Throws IntegrityError if Z C has a non-integral or out-of-range cell.
MessageBlock decrypt(const ExpandedKey& ek, const CipherBlock& cipher);

// Inverts the public matrix; needs no secret material.
MessageBlock break_ciphertext(const PublicKey& pk, const CipherBlock& cipher);

// Block-sequence forms; inverse matrices are computed once per call.
std::vector<CipherBlock> encrypt_blocks(const PublicKey& pk, std::span<const MessageBlock> blocks);
std::vector<MessageBlock> decrypt_blocks(const ExpandedKey& ek, std::span<const CipherBlock> blocks);
std::vector<MessageBlock> break_blocks(const PublicKey& pk, std::span<const CipherBlock> blocks);

}  // namespace cac::crypto
