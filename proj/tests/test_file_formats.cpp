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

#include <doctest.h>

#include <json.hpp>

#include "cac/errors.hpp"
#include "cac/file_formats.hpp"
#include "golden.hpp"

using namespace cac;
namespace golden = cac::testing::golden;

TEST_CASE("public key file") {
  const auto keys = crypto::keygen(golden::kL, golden::kP, golden::kSeed);
  const auto text = io::write_public_key(keys.public_key);
  CHECK(text ==
        "{\n  \"gamma_prime\": \"11\",\n  \"l\": \"2\",\n  \"p\": \"17\",\n  \"role\": \"public\",\n"
        "  \"version\": 1\n}\n");
  const auto back = io::read_public_key(text);
  CHECK(back.gamma_prime().value() == 11);
  CHECK(io::write_public_key(back) == text);
  CHECK(io::fingerprint(back) == io::fingerprint(keys.public_key));
  CHECK(io::fingerprint(back).size() == 16);
}

TEST_CASE("secret key file") {
  const auto keys = crypto::keygen(golden::kL, golden::kP, golden::kSeed);
  const auto text = io::write_secret_key(keys.secret_key);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("r0") == "7");
  CHECK(j.at("gamma_double_prime") == "3");
  CHECK(j.at("gamma_prime") == "11");
  CHECK(j.at("role") == "secret");
  const auto back = io::read_secret_key(text);
  CHECK(back.r0() == 7);
  CHECK(io::write_secret_key(back) == text);

  auto wrong_r0 = j;
  wrong_r0["r0"] = "5";
  CHECK_THROWS_AS(io::read_secret_key(wrong_r0.dump()), IntegrityError);
  auto same = j;
  same["gamma_double_prime"] = "11";
  CHECK_THROWS_AS(io::read_secret_key(same.dump()), ParamError);
  auto not_gen = j;
  not_gen["gamma_double_prime"] = "2";
  CHECK_THROWS_AS(io::read_secret_key(not_gen.dump()), ParamError);
  CHECK_THROWS_AS(io::read_public_key(text), FormatError);
}

TEST_CASE("malformed key files") {
  CHECK_THROWS_AS(io::read_public_key("not json"), FormatError);
  CHECK_THROWS_AS(io::read_public_key("{}"), FormatError);
  CHECK_THROWS_AS(
      io::read_public_key(R"({"version":1,"role":"public","p":17,"l":"2","gamma_prime":"11"})"),
      FormatError);
  CHECK_THROWS_AS(
      io::read_public_key(R"({"version":2,"role":"public","p":"17","l":"2","gamma_prime":"11"})"),
      FormatError);
  CHECK_THROWS_AS(
      io::read_public_key(R"({"version":1,"role":"public","p":"017","l":"2","gamma_prime":"11"})"),
      FormatError);
  CHECK_THROWS_AS(
      io::read_public_key(R"({"version":1,"role":"public","p":"19","l":"3","gamma_prime":"2"})"),
      SingularMatrix);
  CHECK_THROWS_AS(
      io::read_public_key(R"({"version":1,"role":"public","p":"13","l":"2","gamma_prime":"2"})"),
      ParamError);
  CHECK_THROWS_AS(io::parse_decimal("-1", "x"), FormatError);
  CHECK_THROWS_AS(io::parse_decimal("99999999999999999999", "x"), FormatError);
  CHECK(io::parse_decimal("18446744073709551615", "x") == UINT64_MAX);
}

TEST_CASE("cipher file") {
  io::CipherFile file{17, 2, 11, {crypto::CipherBlock(golden::c()), crypto::CipherBlock(golden::b3())}};
  const auto text = io::write_cipher_file(file);
  const auto back = io::read_cipher_file(text);
  CHECK(back.p == 17);
  CHECK(back.l == 2);
  CHECK(back.gamma_prime == 11);
  CHECK(back.blocks == file.blocks);
  CHECK(io::write_cipher_file(back) == text);

  auto j = nlohmann::json::parse(text);
  CHECK(j.at("blocks")[0][0][0] == "2");
  auto ragged = j;
  ragged["blocks"][0][3].erase(0);
  CHECK_THROWS_AS(io::read_cipher_file(ragged.dump()), FormatError);
  auto negative = j;
  negative["blocks"][0][0][0] = "-4";
  CHECK_THROWS_AS(io::read_cipher_file(negative.dump()), FormatError);
  auto numeric = j;
  numeric["blocks"][0][0][0] = 4;
  CHECK_THROWS_AS(io::read_cipher_file(numeric.dump()), FormatError);
  auto wrong_order = j;
  wrong_order["l"] = "3";
  CHECK_THROWS_AS(io::read_cipher_file(wrong_order.dump()), FormatError);
}

TEST_CASE("table json") {
  const auto params = cyclotomy::make_params(2, 17);
  const auto t = nlohmann::json::parse(io::table_json(cyclotomy::equality_table(params), params));
  CHECK(t.at("kind") == "representatives");
  CHECK(t.at("rows")[1][1] == "0:7");
  CHECK(t.at("k") == "2");
  const auto m = nlohmann::json::parse(
      io::matrix_json(cyclotomy::cyclotomic_matrix(field::Generator(3, params.modulus()), params), params));
  CHECK(m.at("kind") == "matrix");
  CHECK(m.at("generator") == "3");
  CHECK(m.at("rows")[0][6] == "1");
}
