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

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cac/cyclotomy.hpp"
#include "cli.hpp"
#include "golden.hpp"

namespace fs = std::filesystem;
namespace golden = cac::testing::golden;
using cac::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("cac_cli_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spill(const std::string& path, const std::string& data) {
  std::ofstream(path, std::ios::binary) << data;
}

std::string golden_a_bytes() {
  const auto a = golden::a();
  std::string out;
  for (const auto& x : a.cells()) out.push_back(static_cast<char>(x.get_ui()));
  return out;
}

std::string matrix_csv(const cac::exact::IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).get_str();
    out += "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("cli generators") {
  CHECK(cli({"generators", "--p", "17"}).out == "3\n5\n6\n7\n10\n11\n12\n14\n");
  CHECK(cli({"generators", "--p", "3"}).out == "2\n");
  CHECK(cli({"generators", "--p", "7"}).out == "3\n5\n");
  CHECK(cli({"generators", "--p", "15"}).code == cac::cli::kParamError);
  CHECK(cli({"generators"}).code == cac::cli::kParamError);
  CHECK(cli({"--help"}).code == cac::cli::kOk);
}

TEST_CASE("cli table") {
  CHECK(cli({"table", "--l", "2", "--p", "17", "--generator", "3"}).out == matrix_csv(golden::b0()));
  CHECK(cli({"table", "--l", "2", "--p", "17", "--generator", "11"}).out == matrix_csv(golden::b3()));
  CHECK(cli({"table", "--l", "2", "--p", "17"}).out == golden::kTableEven);
  const auto j = nlohmann::json::parse(cli({"table", "--l", "2", "--p", "17", "--format", "json"}).out);
  CHECK(j.at("rows")[1][1] == "0:7");
  CHECK(cli({"table", "--l", "2", "--p", "13"}).code == cac::cli::kParamError);
  CHECK(cli({"table", "--l", "2", "--p", "17", "--generator", "2"}).code == cac::cli::kParamError);
  CHECK(cli({"table", "--l", "2", "--p", "17", "--format", "xml"}).code == cac::cli::kParamError);
}

TEST_CASE("cli keygen") {
  TempDir dir;
  const auto pub = dir / "pub.json";
  const auto sec = dir / "sec.json";
  auto r = cli({"keygen", "--l", "2", "--p", "17", "--seed", std::to_string(golden::kSeed),
                "--public-out", pub, "--secret-out", sec});
  REQUIRE(r.code == 0);
  CHECK(r.out.size() == 17);
  const auto sk = nlohmann::json::parse(slurp(sec));
  CHECK(sk.at("r0") == "7");
  CHECK(sk.at("gamma_prime") == "11");
  CHECK(sk.at("gamma_double_prime") == "3");

  // Explicit generators give the same files.
  const auto pub2 = dir / "pub2.json";
  const auto sec2 = dir / "sec2.json";
  REQUIRE(cli({"keygen", "--l", "2", "--p", "17", "--generator", "11", "--secret-generator", "3",
               "--public-out", pub2, "--secret-out", sec2})
              .code == 0);
  CHECK(slurp(pub2) == slurp(pub));
  CHECK(slurp(sec2) == slurp(sec));

  CHECK(cli({"keygen", "--l", "3", "--p", "19", "--public-out", pub, "--secret-out", sec}).code ==
        cac::cli::kParamError);
  CHECK(cli({"keygen", "--l", "2", "--p", "17", "--generator", "11", "--public-out", pub}).code ==
        cac::cli::kParamError);
}

TEST_CASE("cli encrypt, decrypt, attack") {
  TempDir dir;
  const auto pub = dir / "pub.json";
  const auto sec = dir / "sec.json";
  REQUIRE(cli({"keygen", "--l", "2", "--p", "17", "--seed", std::to_string(golden::kSeed),
               "--public-out", pub, "--secret-out", sec})
              .code == 0);

  SUBCASE("raw worked example") {
    spill(dir / "a.bin", golden_a_bytes());
    REQUIRE(cli({"encrypt", "--key", pub, "--in", dir / "a.bin", "--out", dir / "c.json", "--raw-block"})
                .code == 0);
    const auto c = nlohmann::json::parse(slurp(dir / "c.json"));
    REQUIRE(c.at("blocks").size() == 1);
    CHECK(c.at("blocks")[0][0] == nlohmann::json({"2", "1", "3", "2", "5", "6", "8", "7"}));
    CHECK(c.at("blocks")[0][3][4] == "18");
    CHECK(cli({"decrypt", "--key", sec, "--in", dir / "c.json", "--raw-block"}).out == golden_a_bytes());
    CHECK(cli({"attack", "--key", pub, "--in", dir / "c.json", "--raw-block"}).out == golden_a_bytes());
    spill(dir / "short.bin", "abc");
    CHECK(cli({"encrypt", "--key", pub, "--in", dir / "short.bin", "--raw-block"}).code ==
          cac::cli::kIntegrity);
  }

  SUBCASE("empty message") {
    spill(dir / "empty", "");
    REQUIRE(cli({"encrypt", "--key", pub, "--in", dir / "empty", "--out", dir / "c.json"}).code == 0);
    CHECK(nlohmann::json::parse(slurp(dir / "c.json")).at("blocks").size() == 1);
    auto d = cli({"decrypt", "--key", sec, "--in", dir / "c.json"});
    CHECK(d.code == 0);
    CHECK(d.out.empty());
    CHECK(cli({"attack", "--key", pub, "--in", dir / "c.json"}).out.empty());
  }

  SUBCASE("random messages") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
      std::string msg(rng() % 3000, '\0');
      for (auto& ch : msg) ch = static_cast<char>(rng());
      spill(dir / "m", msg);
      REQUIRE(cli({"encrypt", "--key", pub, "--in", dir / "m", "--out", dir / "c.json"}).code == 0);
      const auto first = slurp(dir / "c.json");
      REQUIRE(cli({"encrypt", "--key", pub, "--in", dir / "m", "--out", dir / "c.json"}).code == 0);
      REQUIRE(slurp(dir / "c.json") == first);
      const auto dec = cli({"decrypt", "--key", sec, "--in", dir / "c.json"});
      const auto att = cli({"attack", "--key", pub, "--in", dir / "c.json"});
      REQUIRE(dec.code == 0);
      REQUIRE(dec.out == msg);
      REQUIRE(att.out == dec.out);
    }
  }

  SUBCASE("tampered and mismatched ciphertext") {
    spill(dir / "m", "hello, cyclotomic world");
    REQUIRE(cli({"encrypt", "--key", pub, "--in", dir / "m", "--out", dir / "c.json"}).code == 0);
    auto c = nlohmann::json::parse(slurp(dir / "c.json"));
    // Row 7 of the first block is zero padding, so bumping C[1][0] drives
    // plaintext cell (7,0) to -1.
    const auto cell = std::stoi(c["blocks"][0][1][0].get<std::string>());
    c["blocks"][0][1][0] = std::to_string(cell + 1);
    spill(dir / "t.json", c.dump());
    CHECK(cli({"decrypt", "--key", sec, "--in", dir / "t.json"}).code == cac::cli::kIntegrity);
    CHECK(cli({"attack", "--key", pub, "--in", dir / "t.json"}).code == cac::cli::kIntegrity);

    const auto pub41 = dir / "p41.json";
    const auto sec41 = dir / "s41.json";
    REQUIRE(cli({"keygen", "--l", "2", "--p", "41", "--seed", "1", "--public-out", pub41,
                 "--secret-out", sec41})
                .code == 0);
    CHECK(cli({"decrypt", "--key", sec41, "--in", dir / "c.json"}).code == cac::cli::kIntegrity);
    CHECK(cli({"decrypt", "--key", dir / "missing.json", "--in", dir / "c.json"}).code ==
          cac::cli::kIntegrity);
    spill(dir / "k1.json", R"({"version":1,"role":"public","p":"19","l":"3","gamma_prime":"2"})");
    CHECK(cli({"encrypt", "--key", dir / "k1.json", "--in", dir / "m"}).code == cac::cli::kSingular);
  }
}

TEST_CASE("cli bench") {
  auto r = cli({"bench", "--l", "2", "--p", "17", "--repetitions", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header.rfind("l,p,e,k,generator,pairs,class_count,pair_ratio,", 0) == 0);
  CHECK(row.rfind("2,17,8,2,3,64,15,4.2667,64,15,", 0) == 0);

  r = cli({"bench", "--l", "3", "--p", "37", "--repetitions", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n3,37,18,2,2,324,64,5.0625,324,64,") != std::string::npos);
  CHECK(cli({"bench", "--l", "3", "--p", "17"}).code == cac::cli::kParamError);
}
