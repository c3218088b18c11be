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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cac/cryptosystem.hpp"
#include "cac/cyclotomy.hpp"
#include "cac/errors.hpp"
#include "cac/file_formats.hpp"

namespace cac::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw FormatError("write to " + path + " failed");
}

void emit(const std::string& data, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << data;
  } else {
    write_file(path, data);
  }
}

std::vector<std::uint8_t> as_bytes(const std::string& s) { return {s.begin(), s.end()}; }

std::string as_string(const std::vector<std::uint8_t>& v) { return {v.begin(), v.end()}; }

std::vector<crypto::MessageBlock> frame(const std::string& plain, const cyclotomy::CyclotomyParams& params,
                                        bool raw) {
  const auto bytes = as_bytes(plain);
  if (!raw) return crypto::encode_message(bytes, params);
  const std::size_t block_bytes = params.e() * params.e();
  if (bytes.empty() || bytes.size() % block_bytes != 0) {
    throw FormatError("--raw-block input must be a positive multiple of " +
                      std::to_string(block_bytes) + " bytes");
  }
  std::vector<crypto::MessageBlock> blocks;
  for (std::size_t off = 0; off < bytes.size(); off += block_bytes) {
    blocks.push_back(crypto::raw_block(std::span(bytes).subspan(off, block_bytes), params));
  }
  return blocks;
}

std::string unframe(const std::vector<crypto::MessageBlock>& blocks, bool raw) {
  if (!raw) return as_string(crypto::decode_message(blocks));
  std::string out;
  for (const auto& b : blocks) out += as_string(crypto::raw_bytes(b));
  return out;
}

io::CipherFile load_cipher_for(const std::string& path, const cyclotomy::CyclotomyParams& params,
                               std::uint64_t gamma_prime) {
  auto file = io::read_cipher_file(read_file(path));
  if (file.p != params.p() || file.l != params.l() || file.gamma_prime != gamma_prime) {
    throw IntegrityError("ciphertext was produced under a different public key");
  }
  return file;
}

struct Options {
  std::uint64_t p = 0;
  std::uint64_t l = 0;
  std::optional<std::uint64_t> generator;
  std::optional<std::uint64_t> secret_generator;
  std::uint64_t seed = 0;
  std::string format = "csv";
  bool raw_block = false;
  std::string key;
  std::string in;
  std::string out;
  std::string public_out = "public.json";
  std::string secret_out = "secret.json";
  int repetitions = 3;
  unsigned threads = 1;
};

int cmd_generators(const Options& o, std::ostream& out) {
  field::PrimeModulus modulus(o.p);
  for (const auto& g : field::find_generators(modulus)) out << g.value() << '\n';
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto params = cyclotomy::make_params(o.l, o.p);
  std::string text;
  if (o.generator) {
    const auto matrix = cyclotomy::cyclotomic_matrix(field::Generator(*o.generator, params.modulus()),
                                                     params, nullptr, o.threads);
    text = o.format == "json" ? io::matrix_json(matrix, params) : cyclotomy::to_csv(matrix);
  } else {
    const auto table = cyclotomy::equality_table(params);
    text = o.format == "json" ? io::table_json(table, params) : cyclotomy::to_csv(table);
  }
  emit(text, o.out, out);
  return kOk;
}

int cmd_keygen(const Options& o, std::ostream& out) {
  std::optional<crypto::KeyPair> keys;
  if (o.generator || o.secret_generator) {
    if (!o.generator || !o.secret_generator) {
      throw ParamError("--generator and --secret-generator must be given together");
    }
    const auto params = cyclotomy::make_params(o.l, o.p);
    keys.emplace(crypto::make_keypair(params, field::Generator(*o.generator, params.modulus()),
                                      field::Generator(*o.secret_generator, params.modulus())));
  } else {
    keys.emplace(crypto::keygen(o.l, o.p, o.seed));
  }
  write_file(o.public_out, io::write_public_key(keys->public_key));
  write_file(o.secret_out, io::write_secret_key(keys->secret_key));
  out << io::fingerprint(keys->public_key) << '\n';
  return kOk;
}

int cmd_encrypt(const Options& o, std::ostream& out) {
  const auto pk = io::read_public_key(read_file(o.key));
  const auto blocks = frame(read_file(o.in), pk.params(), o.raw_block);
  io::CipherFile file{pk.params().p(), pk.params().l(), pk.gamma_prime().value(),
                      crypto::encrypt_blocks(pk, blocks)};
  emit(io::write_cipher_file(file), o.out, out);
  return kOk;
}

int cmd_decrypt(const Options& o, std::ostream& out) {
  const auto sk = io::read_secret_key(read_file(o.key));
  const auto file = load_cipher_for(o.in, sk.params(), sk.paired_gamma_prime());
  const auto ek = crypto::expand_secret(sk);
  emit(unframe(crypto::decrypt_blocks(ek, file.blocks), o.raw_block), o.out, out);
  return kOk;
}

int cmd_attack(const Options& o, std::ostream& out) {
  const auto pk = io::read_public_key(read_file(o.key));
  const auto file = load_cipher_for(o.in, pk.params(), pk.gamma_prime().value());
  emit(unframe(crypto::break_blocks(pk, file.blocks), o.raw_block), o.out, out);
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto params = cyclotomy::make_params(o.l, o.p);
  const auto gamma = o.generator ? field::Generator(*o.generator, params.modulus())
                                 : field::smallest_generator(params.modulus());
  const int reps = std::max(1, o.repetitions);
  using clock = std::chrono::steady_clock;

  cyclotomy::BuildStats naive_stats;
  cyclotomy::BuildStats reduced_stats;
  double naive_ms = 0;
  double reduced_ms = 0;
  for (int r = 0; r < reps; ++r) {
    cyclotomy::BuildStats ns;
    cyclotomy::BuildStats rs;
    auto t0 = clock::now();
    const auto naive = cyclotomy::naive_cyclotomic_matrix(gamma, params, &ns);
    auto t1 = clock::now();
    const auto reduced = cyclotomy::cyclotomic_matrix(gamma, params, &rs, o.threads);
    auto t2 = clock::now();
    if (!(naive.values == reduced.values)) throw std::logic_error("naive and reduced matrices differ");
    naive_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
    reduced_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
    naive_stats = ns;
    reduced_stats = rs;
  }
  naive_ms /= reps;
  reduced_ms /= reps;

  const std::uint64_t pairs = params.e() * params.e();
  const std::uint64_t classes = cyclotomy::class_count(params);
  out << "l,p,e,k,generator,pairs,class_count,pair_ratio,naive_evaluations,reduced_evaluations,"
         "naive_ms,reduced_ms,speedup\n";
  out << std::fixed << std::setprecision(4) << params.l() << ',' << params.p() << ',' << params.e()
      << ',' << params.k() << ',' << gamma.value() << ',' << pairs << ',' << classes << ','
      << static_cast<double>(pairs) / static_cast<double>(classes) << ',' << naive_stats.evaluations
      << ',' << reduced_stats.evaluations << ',' << naive_ms << ',' << reduced_ms << ','
      << (reduced_ms > 0 ? naive_ms / reduced_ms : 0.0) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic matrices over F_p and the cyclotomic asymmetric cryptosystem", "cac"};
  app.require_subcommand(1);
  Options o;

  auto* generators = app.add_subcommand("generators", "List the generators of F_p^*");
  generators->add_option("--p", o.p, "Odd prime")->required();

  auto* table = app.add_subcommand("table", "Print the equality table or a cyclotomic matrix");
  table->add_option("--l", o.l, "Prime l (order e = 2l^2)")->required();
  table->add_option("--p", o.p, "Prime p = 2l^2 k + 1")->required();
  table->add_option("--generator", o.generator, "Print the numeric matrix for this generator");
  table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", o.out, "Output path (default stdout)");
  table->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--l", o.l)->required();
  keygen->add_option("--p", o.p)->required();
  keygen->add_option("--seed", o.seed, "Seed for the generator draw");
  keygen->add_option("--generator", o.generator, "Explicit public generator");
  keygen->add_option("--secret-generator", o.secret_generator, "Explicit secret generator");
  keygen->add_option("--public-out", o.public_out);
  keygen->add_option("--secret-out", o.secret_out);

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file under a public key");
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a cipher file with a secret key");
  auto* attack = app.add_subcommand("attack", "Decrypt a cipher file using only the public key");
  for (auto* sub : {encrypt, decrypt, attack}) {
    sub->add_option("--key", o.key, "Key file")->required();
    sub->add_option("--in", o.in, "Input file")->required();
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_flag("--raw-block", o.raw_block, "Unframed blocks of exactly e^2 bytes");
  }

  auto* bench = app.add_subcommand("bench", "Time naive vs class-reduced matrix construction");
  bench->add_option("--l", o.l)->required();
  bench->add_option("--p", o.p)->required();
  bench->add_option("--generator", o.generator);
  bench->add_option("--repetitions", o.repetitions);
  bench->add_option("--threads", o.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParamError;
  }

  try {
    if (*generators) return cmd_generators(o, out);
    if (*table) return cmd_table(o, out);
    if (*keygen) return cmd_keygen(o, out);
    if (*encrypt) return cmd_encrypt(o, out);
    if (*decrypt) return cmd_decrypt(o, out);
    if (*attack) return cmd_attack(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const ParamError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParamError;
  } catch (const SingularMatrix& e) {
    err << "singular matrix: " << e.what() << '\n';
    return kSingular;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kIntegrity;
  }
  return kParamError;
}

}  // namespace cac::cli
