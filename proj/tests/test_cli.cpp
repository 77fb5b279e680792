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


#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "reference_t3.hpp"
#include "hadspectra/io.hpp"

namespace fs = std::filesystem;

namespace
{

struct Outcome
{
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch(const std::string & name)
{
  const fs::path dir = fs::path(HADSPECTRA_TEST_TMP) / "cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path & p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome run(const std::string & args)
{
  const fs::path out = scratch("stdout.txt");
  const fs::path err = scratch("stderr.txt");
  const std::string cmd =
    std::string("'") + HADSPECTRA_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Outcome r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string path_arg(const fs::path & p) { return "'" + p.string() + "'"; }

}  // namespace

TEST(Cli, ConstructLevelThreeMatchesReference)
{
  const Outcome r = run("construct --t 3");
  ASSERT_EQ(r.code, 0) << r.err;
  std::string expected = "HAD 8\n";
  for (const auto & row : ref3::kPS3) {
    for (int v : row) expected += v > 0 ? '+' : '-';
    expected += '\n';
  }
  EXPECT_EQ(r.out, expected);
  EXPECT_NE(r.err.find("runtime_seconds:"), std::string::npos);
}

TEST(Cli, ArgumentErrorsExitTwo)
{
  EXPECT_EQ(run("construct --t 7").code, 2);
  EXPECT_EQ(run("construct").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("construct --t 3 --format bogus").code, 2);
  EXPECT_EQ(run("sylvester --n -1").code, 2);
  EXPECT_EQ(run("orbits --t 6").code, 2);
}

TEST(Cli, ConstructFileIsDeterministic)
{
  const fs::path a = scratch("h4a.hadb");
  const fs::path b = scratch("h4b.hadb");
  ASSERT_EQ(run("construct --t 4 --format packed --out " + path_arg(a)).code, 0);
  ASSERT_EQ(run("construct --t 4 --format packed --threads 3 " + path_arg(b)).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(hadspectra::read_matrix_file(a).as_real().order(), 128u);
}

TEST(Cli, CertifyLevels)
{
  for (int t : {2, 3, 4, 5}) {
    const Outcome r = run("certify --t " + std::to_string(t));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"t\": " + std::to_string(t)), std::string::npos);
    EXPECT_EQ(r.out.find("\"passed\": false"), std::string::npos);
  }
  EXPECT_EQ(run("certify --t 3").out, run("certify --t 3 --threads 2").out);
}

TEST(Cli, CertifyFromFile)
{
  const fs::path good = scratch("h3.had");
  ASSERT_EQ(run("construct --t 3 --out " + path_arg(good)).code, 0);
  EXPECT_EQ(run("certify " + path_arg(good)).code, 0);
  std::string text = slurp(good);
  text[6] = text[6] == '+' ? '-' : '+';
  const fs::path bad = scratch("h3-bad.had");
  std::ofstream(bad) << text;
  EXPECT_EQ(run("certify " + path_arg(bad)).code, 1);
  EXPECT_EQ(run("verify " + path_arg(bad)).code, 1);
  const fs::path other = scratch("s3.had");
  ASSERT_EQ(run("sylvester --n 4 --out " + path_arg(other)).code, 0);
  EXPECT_EQ(run("certify " + path_arg(other)).code, 1);
}

TEST(Cli, InputErrors)
{
  EXPECT_EQ(run("verify " + path_arg(scratch("missing.had"))).code, 3);
  const fs::path junk = scratch("junk.had");
  std::ofstream(junk) << "HAD 2\n+?\n++\n";
  EXPECT_EQ(run("verify " + path_arg(junk)).code, 4);
}

TEST(Cli, VerifyButson)
{
  const fs::path f4 = scratch("f4.bh");
  std::ofstream(f4) << "BH 4 4\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n";
  const Outcome r = run("verify " + path_arg(f4));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("orthogonality: pass"), std::string::npos) << r.out;
  const fs::path bad = scratch("f4-bad.bh");
  std::ofstream(bad) << "BH 4 4\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 2\n";
  EXPECT_EQ(run("verify " + path_arg(bad)).code, 1);
}

TEST(Cli, Charpoly)
{
  const fs::path h3 = scratch("h3c.had");
  ASSERT_EQ(run("construct --t 3 --out " + path_arg(h3)).code, 0);
  const Outcome norm = run("charpoly --normalized " + path_arg(h3));
  EXPECT_EQ(norm.code, 0) << norm.err;
  EXPECT_NE(norm.out.find("x^8 + 1"), std::string::npos) << norm.out;
  const Outcome raw = run("charpoly " + path_arg(h3));
  EXPECT_NE(raw.out.find("x^8 + 4096"), std::string::npos) << raw.out;
}

TEST(Cli, Minpoly)
{
  const Outcome cert = run("minpoly --t 4");
  EXPECT_EQ(cert.code, 0) << cert.err;
  EXPECT_NE(cert.out.find("x^16 + 1"), std::string::npos) << cert.out;
  const fs::path s = scratch("s2.had");
  ASSERT_EQ(run("sylvester --n 2 --out " + path_arg(s)).code, 0);
  EXPECT_EQ(run("minpoly " + path_arg(s)).code, 1);
}

TEST(Cli, MorphThenVerify)
{
  const fs::path f8 = scratch("f8.bh");
  std::ostringstream text;
  text << "BH 8 8\n";
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) text << (r * c) % 8 << (c == 7 ? '\n' : ' ');
  }
  std::ofstream(f8) << text.str();
  const fs::path out = scratch("f8-real.hadb");
  const Outcome m = run("morph --t 3 --format packed " + path_arg(f8) + " " + path_arg(out));
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(hadspectra::read_matrix_file(out).as_real().order(), 64u);
  const Outcome v = run("verify " + path_arg(out));
  EXPECT_EQ(v.code, 0) << v.err;
  const fs::path again = scratch("f8-real2.hadb");
  ASSERT_EQ(run("morph --t 3 --format packed --threads 2 " + path_arg(f8) + " " + path_arg(again)).code, 0);
  EXPECT_EQ(slurp(out), slurp(again));
  EXPECT_EQ(run("morph --t 2 " + path_arg(f8)).code, 2);
}

TEST(Cli, OrbitsJson)
{
  const Outcome r = run("orbits --t 4");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"orbit_count\": 16"), std::string::npos);
}
