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

#include "cac/cryptosystem.hpp"

#include <numeric>
#include <random>
#include <string>

#include "cac/errors.hpp"

namespace cac::crypto {

using cyclotomy::CyclotomyParams;
using cyclotomy::IndexPair;
using cyclotomy::RepTable;
using exact::IntMatrix;
using exact::RatMatrix;

namespace {

void check_order(const IntMatrix& m, const CyclotomyParams& params, const char* what) {
  if (m.rows() != params.e() || m.cols() != params.e()) {
    throw FormatError(std::string(what) + " is not of order " + std::to_string(params.e()));
  }
}

void check_cipher(const CipherBlock& cipher, const CyclotomyParams& params) {
  check_order(cipher.matrix(), params, "cipher block");
  const mpz_class bound = mpz_class(static_cast<unsigned long>(params.e())) *
                          static_cast<unsigned long>(params.k()) * 255;
  for (const auto& x : cipher.matrix().cells()) {
    if (x > bound) throw FormatError("cipher cell exceeds e*k*255");
  }
}

MessageBlock recover(const RatMatrix& z, const CipherBlock& cipher) {
  auto plain = exact::to_integral(exact::rat_mul(z, cipher.matrix()));
  if (!plain) throw IntegrityError("recovered block is not integral");
  for (const auto& x : plain->cells()) {
    if (x < 0 || x > 255) throw IntegrityError("recovered cell outside [0, 255]");
  }
  return MessageBlock(std::move(*plain));
}

}  // namespace

PublicKey::PublicKey(CyclotomyParams params, field::Generator gamma_prime)
    : params_(std::move(params)),
      gamma_prime_(std::move(gamma_prime)),
      matrix_(cyclotomy::cyclotomic_matrix(gamma_prime_, params_)),
      int_matrix_(matrix_.to_int_matrix()) {
  if (exact::determinant(int_matrix_) == 0) {
    throw SingularMatrix("public matrix for generator " + std::to_string(gamma_prime_.value()) +
                         " is singular");
  }
}

SecretKey::SecretKey(CyclotomyParams params, field::Generator gamma_double_prime, std::uint64_t r0)
    : params_(std::move(params)), gamma_double_prime_(std::move(gamma_double_prime)), r0_(r0) {
  const std::uint64_t order = params_.modulus().group_order();
  if (!(gamma_double_prime_.modulus() == params_.modulus())) {
    throw ParamError("secret generator belongs to a different modulus");
  }
  if (r0 < 1 || r0 > order) throw ParamError("r0 outside [1, p-1]");
  if (std::gcd(r0, order) != 1) throw ParamError("r0 is not coprime to p-1");
  if (r0 == 1 || r0 == order) throw ParamError("secret and public generators coincide");
}

std::uint64_t SecretKey::paired_gamma_prime() const {
  return field::mod_pow(gamma_double_prime_.value(), r0_, params_.modulus());
}

MessageBlock::MessageBlock(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) throw FormatError("message block is not square");
  for (const auto& x : matrix_.cells()) {
    if (x < 0 || x > 255) throw FormatError("message cell outside [0, 255]");
  }
}

CipherBlock::CipherBlock(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) throw FormatError("cipher block is not square");
  for (const auto& x : matrix_.cells()) {
    if (x < 0) throw FormatError("negative cipher cell");
  }
}

KeyPair make_keypair(const CyclotomyParams& params, const field::Generator& gamma_prime,
                     const field::Generator& gamma_double_prime) {
  if (params.k() < 2) throw ParamError("k = 1: every cyclotomic matrix is singular");
  if (gamma_prime == gamma_double_prime) throw ParamError("generators must differ");
  const std::uint64_t r0 = field::discrete_log(gamma_double_prime, gamma_prime.value());
  return KeyPair{PublicKey(params, gamma_prime), SecretKey(params, gamma_double_prime, r0)};
}

KeyPair keygen(std::uint64_t l, std::uint64_t p, std::uint64_t seed, int max_attempts) {
  const CyclotomyParams params = cyclotomy::make_params(l, p);
  if (params.k() < 2) throw ParamError("k = 1: every cyclotomic matrix is singular");

  auto generators = field::find_generators(params.modulus());
  if (generators.size() < 2) throw ParamError("F_p^* has fewer than two generators");
  std::mt19937_64 rng(seed);
  for (std::size_t i = generators.size() - 1; i > 0; --i) {
    std::swap(generators[i], generators[rng() % (i + 1)]);
  }

  const field::Generator& secret = generators[0];
  for (std::size_t i = 1; i < generators.size() && static_cast<int>(i) <= max_attempts; ++i) {
    try {
      return make_keypair(params, generators[i], secret);
    } catch (const SingularMatrix&) {
      continue;
    }
  }
  throw SingularMatrix("no non-singular public matrix within " + std::to_string(max_attempts) +
                       " attempts");
}

std::vector<MessageBlock> encode_message(std::span<const std::uint8_t> data,
                                         const CyclotomyParams& params) {
  const std::size_t e = params.e();
  const std::size_t block_bytes = e * e;
  std::vector<std::uint8_t> framed(8);
  const std::uint64_t length = data.size();
  for (int i = 0; i < 8; ++i) framed[i] = static_cast<std::uint8_t>(length >> (56 - 8 * i));
  framed.insert(framed.end(), data.begin(), data.end());
  framed.resize((framed.size() + block_bytes - 1) / block_bytes * block_bytes, 0);

  std::vector<MessageBlock> blocks;
  for (std::size_t offset = 0; offset < framed.size(); offset += block_bytes) {
    blocks.push_back(raw_block(std::span(framed).subspan(offset, block_bytes), params));
  }
  return blocks;
}

std::vector<std::uint8_t> decode_message(std::span<const MessageBlock> blocks) {
  if (blocks.empty()) throw FormatError("no message blocks");
  const std::size_t e = blocks.front().matrix().rows();
  std::vector<std::uint8_t> framed;
  for (const auto& block : blocks) {
    if (block.matrix().rows() != e) throw FormatError("message blocks differ in order");
    auto bytes = raw_bytes(block);
    framed.insert(framed.end(), bytes.begin(), bytes.end());
  }
  std::uint64_t length = 0;
  for (int i = 0; i < 8 && i < static_cast<int>(framed.size()); ++i) length = (length << 8) | framed[i];
  const std::uint64_t block_bytes = e * e;
  if (framed.size() < 8 || length > framed.size() - 8 ||
      (length + 8 + block_bytes - 1) / block_bytes != blocks.size()) {
    throw FormatError("declared length " + std::to_string(length) + " does not match " +
                      std::to_string(blocks.size()) + " blocks");
  }
  return {framed.begin() + 8, framed.begin() + 8 + static_cast<std::ptrdiff_t>(length)};
}

MessageBlock raw_block(std::span<const std::uint8_t> bytes, const CyclotomyParams& params) {
  const std::size_t e = params.e();
  if (bytes.size() != e * e) {
    throw FormatError("raw block needs exactly " + std::to_string(e * e) + " bytes");
  }
  IntMatrix m(e, e);
  for (std::size_t i = 0; i < e * e; ++i) m(i / e, i % e) = bytes[i];
  return MessageBlock(std::move(m));
}

std::vector<std::uint8_t> raw_bytes(const MessageBlock& block) {
  std::vector<std::uint8_t> out;
  out.reserve(block.matrix().cells().size());
  for (const auto& x : block.matrix().cells()) out.push_back(static_cast<std::uint8_t>(x.get_ui()));
  return out;
}

CipherBlock encrypt(const PublicKey& pk, const MessageBlock& block) {
  check_order(block.matrix(), pk.params(), "message block");
  return CipherBlock(exact::mat_mul(pk.int_matrix(), block.matrix()));
}

RepTable scaled_rep_table(const RepTable& table, std::uint64_t r0, const CyclotomyParams& params) {
  const std::uint64_t e = params.e();
  const std::uint64_t r = r0 % e;
  RepTable out{cyclotomy::Grid<IndexPair>(e)};
  for (std::size_t a = 0; a < e; ++a) {
    for (std::size_t b = 0; b < e; ++b) {
      const IndexPair src = table.entries(a, b);
      const IndexPair scaled{static_cast<std::uint32_t>(src.a * r % e),
                             static_cast<std::uint32_t>(src.b * r % e)};
      out.entries(a, b) = cyclotomy::canonical_rep(scaled, params);
    }
  }
  return out;
}

IntMatrix substitute(const RepTable& symbolic, const cyclotomy::CycMatrix& values) {
  const std::size_t e = symbolic.entries.order();
  IntMatrix out(e, e);
  for (std::size_t a = 0; a < e; ++a) {
    for (std::size_t b = 0; b < e; ++b) {
      const IndexPair at = symbolic.entries(a, b);
      out(a, b) = static_cast<unsigned long>(values.values(at.a, at.b));
    }
  }
  return out;
}

IntMatrix reconstruct_public_matrix(const SecretKey& sk) {
  const auto table = cyclotomy::equality_table(sk.params());
  const auto symbolic = scaled_rep_table(table, sk.r0(), sk.params());
  const auto values = cyclotomy::cyclotomic_matrix(sk.gamma_double_prime(), sk.params());
  return substitute(symbolic, values);
}

ExpandedKey expand_secret(const SecretKey& sk) {
  return ExpandedKey{exact::inverse(reconstruct_public_matrix(sk)), sk.params()};
}

MessageBlock decrypt(const ExpandedKey& ek, const CipherBlock& cipher) {
  check_cipher(cipher, ek.params);
  return recover(ek.z_matrix, cipher);
}

MessageBlock break_ciphertext(const PublicKey& pk, const CipherBlock& cipher) {
  check_cipher(cipher, pk.params());
  return recover(exact::inverse(pk.int_matrix()), cipher);
}

std::vector<CipherBlock> encrypt_blocks(const PublicKey& pk, std::span<const MessageBlock> blocks) {
  std::vector<CipherBlock> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(encrypt(pk, b));
  return out;
}

std::vector<MessageBlock> decrypt_blocks(const ExpandedKey& ek, std::span<const CipherBlock> blocks) {
  std::vector<MessageBlock> out;
  out.reserve(blocks.size());
  for (const auto& c : blocks) out.push_back(decrypt(ek, c));
  return out;
}

std::vector<MessageBlock> break_blocks(const PublicKey& pk, std::span<const CipherBlock> blocks) {
  const ExpandedKey recovered{exact::inverse(pk.int_matrix()), pk.params()};
  return decrypt_blocks(recovered, blocks);
}

}  // namespace cac::crypto
