// Copyright 2026 The hadspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hadspectra/errors.hpp"
#include "hadspectra/io.hpp"
#include "hadspectra/sylvester.hpp"

using namespace hadspectra;
namespace fs = std::filesystem;

namespace
{

PackedSignMatrix random_sign(std::size_t n, std::mt19937_64 & rng)
{
  PackedSignMatrix h(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) h.set_negative(r, c, rng() & 1);
  }
  return h;
}

fs::path scratch(const std::string & name)
{
  const fs::path dir = fs::path(HADSPECTRA_TEST_TMP) / "io";
  fs::create_directories(dir);
  return dir / name;
}

void put(const fs::path & p, const std::string & bytes)
{
  std::ofstream(p, std::ios::binary) << bytes;
}

template <typename Fn>
void expect_parse_error(const std::string & text, Fn && read)
{
  std::istringstream is(text);
  EXPECT_THROW(read(is), ParseError) << text;
}

}  // namespace

TEST(TextFormat, Example)
{
  std::ostringstream os;
  write_text(os, sylvester(1));
  EXPECT_EQ(os.str(), "HAD 2\n++\n+-\n");
  std::istringstream is("HAD 2\r\n++\r\n+-\r\n\n");
  EXPECT_EQ(read_text(is), sylvester(1));
}

TEST(TextFormat, RandomRoundTrips)
{
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const PackedSignMatrix h = random_sign(1 + rng() % 140, rng);
    std::stringstream ss;
    write_text(ss, h);
    EXPECT_EQ(read_text(ss), h);
  }
}

TEST(TextFormat, Rejects)
{
  const auto rd = [](std::istream & is) { return read_text(is); };
  expect_parse_error("", rd);
  expect_parse_error("HAD\n", rd);
  expect_parse_error("HAD 0\n", rd);
  expect_parse_error("HAD 2 3\n++\n+-\n", rd);
  expect_parse_error("HAD 2\n++\n", rd);
  expect_parse_error("HAD 2\n++\n+x\n", rd);
  expect_parse_error("HAD 2\n+++\n+-\n", rd);
  expect_parse_error("HAD 2\n++\n+-\n--\n", rd);
  expect_parse_error("HAD 99999999\n", rd);
}

TEST(PackedFormat, Layout)
{
  std::ostringstream os;
  write_packed(os, sylvester(1));
  const std::string bytes = os.str();
  ASSERT_EQ(bytes.size(), 4u + 8u + 2u);
  EXPECT_EQ(bytes.substr(0, 4), "HADB");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 2u);
  for (int i = 5; i < 12; ++i) EXPECT_EQ(bytes[i], 0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 0u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[13]), 2u);
}

TEST(PackedFormat, RandomRoundTrips)
{
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const PackedSignMatrix h = random_sign(1 + rng() % 300, rng);
    std::stringstream ss;
    write_packed(ss, h);
    EXPECT_EQ(read_packed(ss), h);
  }
}

TEST(PackedFormat, Rejects)
{
  std::ostringstream os;
  write_packed(os, sylvester(2));
  const std::string good = os.str();
  const auto rd = [](std::istream & is) { return read_packed(is); };
  expect_parse_error(good.substr(0, 10), rd);
  expect_parse_error(good.substr(0, good.size() - 1), rd);
  expect_parse_error(good + "x", rd);
  std::string magic = good;
  magic[3] = 'C';
  expect_parse_error(magic, rd);
  std::string padding = good;
  padding[12] = static_cast<char>(padding[12] | 0x80);
  expect_parse_error(padding, rd);
}

TEST(ButsonFormat, RandomRoundTrips)
{
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 30;
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 40);
    ButsonMatrix b(n, k);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) b.set_exp(r, c, rng() % k);
    }
    std::stringstream ss;
    write_butson(ss, b);
    EXPECT_EQ(read_butson(ss), b);
  }
}

TEST(ButsonFormat, Rejects)
{
  const auto rd = [](std::istream & is) { return read_butson(is); };
  expect_parse_error("BH 2\n0 0\n0 1\n", rd);
  expect_parse_error("BH 2 2\n0 0\n0 2\n", rd);
  expect_parse_error("BH 2 2\n0 0 0\n0 1\n", rd);
  expect_parse_error("BH 2 2\n0\n0 1\n", rd);
  expect_parse_error("BH 2 0\n0 0\n0 0\n", rd);
  expect_parse_error("BH 2 2\n0 0\n0 1\n1 1\n", rd);
  expect_parse_error("BH 2 2\n0 a\n0 1\n", rd);
}

TEST(Files, AutoDetection)
{
  const PackedSignMatrix h = sylvester(3);
  write_matrix_file(scratch("s.had"), h, MatrixFormat::kText);
  write_matrix_file(scratch("s.hadb"), h, MatrixFormat::kPacked);
  write_matrix_file(scratch("f.bh"), fourier_matrix(4));
  const LoadedMatrix text = read_matrix_file(scratch("s.had"));
  const LoadedMatrix packed = read_matrix_file(scratch("s.hadb"));
  const LoadedMatrix bh = read_matrix_file(scratch("f.bh"));
  EXPECT_EQ(text.format, MatrixFormat::kText);
  EXPECT_EQ(packed.format, MatrixFormat::kPacked);
  EXPECT_EQ(bh.format, MatrixFormat::kButson);
  EXPECT_EQ(text.as_real(), h);
  EXPECT_EQ(packed.as_real(), h);
  EXPECT_EQ(bh.as_butson(), fourier_matrix(4));
  EXPECT_FALSE(bh.is_real());
  EXPECT_THROW(bh.as_real(), InvalidInput);
  EXPECT_EQ(text.as_butson(), from_packed(h));
}

TEST(Files, RealButsonConverts)
{
  write_matrix_file(scratch("real.bh"), from_packed(sylvester(2)));
  EXPECT_EQ(read_matrix_file(scratch("real.bh")).as_real(), sylvester(2));
}

TEST(Files, Errors)
{
  EXPECT_THROW(read_matrix_file(scratch("does-not-exist")), IoError);
  put(scratch("junk"), "hello\n");
  EXPECT_THROW(read_matrix_file(scratch("junk")), ParseError);
  put(scratch("empty"), "");
  EXPECT_THROW(read_matrix_file(scratch("empty")), ParseError);
  EXPECT_THROW(write_matrix_file(scratch("no-such-dir") / "x", sylvester(1), MatrixFormat::kText), IoError);
}

TEST(Json, CertificateKeyOrderAndDeterminism)
{
  const SpectralCertificate cert = certify(build_Ht(3));
  const std::string a = certificate_json(cert);
  EXPECT_EQ(a, certificate_json(certify(build_Ht(3))));
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(a);
  std::vector<std::string> keys;
  for (const auto & item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"t", "n", "N", "s", "orbit_count", "all_lengths", "all_products_minus_one",
                                            "minpoly_PQ", "concluded_minpoly_normalized", "closed_form_sign",
                                            "check_H2", "hadamard_gram", "checks"}));
  EXPECT_EQ(j["N"], 8);
  EXPECT_EQ(j["s"], 1);
  EXPECT_EQ(j["orbit_count"], 2);
  EXPECT_EQ(j["concluded_minpoly_normalized"]["text"], "x^8 + 1");
  EXPECT_EQ(j["minpoly_PQ"]["text"], "x^4 + 1");
  for (const auto & c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(Json, SoundPairReport)
{
  PackedSignMatrix m(2);
  m.set_negative(1, 0, true);
  const SoundPairReport r = sound_pair_check(twist_odd(fourier_matrix(4)), PlugInKernel::from_matrix(m), {1, 7});
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(sound_pair_json(r));
  EXPECT_EQ(j["k"], 8);
  EXPECT_TRUE(j["sound"].get<bool>());
  EXPECT_EQ(j["X"], nlohmann::ordered_json::parse("[1, 3, 5, 7]"));
}

TEST(Json, OrbitAudit)
{
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(orbit_audit_json(orbit_audit(4)));
  EXPECT_EQ(j["orbit_count"], 16);
  EXPECT_EQ(j["expected_length"], 8);
  EXPECT_TRUE(j["all_lengths_expected"].get<bool>());
}
