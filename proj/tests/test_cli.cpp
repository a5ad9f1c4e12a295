// Copyright 2026 The womlat Authors
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
#include <sstream>

#include <gtest/gtest.h>

#include "cli_app.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = womlat::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("womlat_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    for (const char* name : {"FIG2", "M3A", "M3B", "B4"})
      write(std::string(name) + ".lat", run({"fixtures", "emit", name}).out);
    write("s.msr", "0: 0\na: 1/2\nb: 1/2\nc: 1/2\n1: 1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckOrthomodularFailsOnFig2) {
  auto r = run({"check", path("FIG2.lat"), "--prop", "om"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness: x=a y=f"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("a<=f but f'=c not<= g=a'"), std::string::npos);
}

TEST_F(Cli, CheckHolds) {
  EXPECT_EQ(run({"check", path("FIG2.lat"), "--prop", "wom"}).code, 0);
  EXPECT_EQ(run({"check", path("M3B.lat"), "--prop", "lemma-bounds"}).code, 0);
  EXPECT_EQ(run({"check", path("M3B.lat"), "--prop", "dnl"}).code, 1);
}

TEST_F(Cli, JsonReport) {
  auto r = run({"--json", "check", path("M3B.lat"), "--prop", "dnl"});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"]["x"], "a");
  auto after = run({"check", path("FIG2.lat"), "--prop", "wom", "--json"});
  EXPECT_TRUE(nlohmann::json::parse(after.out)["witness"].is_null());
}

TEST_F(Cli, VerifyResiduation) {
  EXPECT_EQ(run({"verify", path("FIG2.lat"), "--theorem", "residuation"}).code, 0);
  EXPECT_EQ(run({"verify", path("M3B.lat"), "--theorem", "residuation"}).code, 1);
  EXPECT_EQ(run({"verify", path("M3B.lat"), "--theorem", "d-bijection"}).code, 0);
  EXPECT_EQ(run({"verify", path("B4.lat"), "--theorem", "measures"}).code, 0);
}

TEST_F(Cli, ConverseUsesFileTables) {
  auto derived = run({"derive", path("FIG2.lat"), "--impl", "w"});
  ASSERT_EQ(derived.code, 0);
  auto both = derived.out + run({"derive", path("FIG2.lat"), "--impl", "product"}).out;
  // merge the product section into the derived file
  auto star = both.find("[binary *]");
  write("g.lat", derived.out + both.substr(star));
  auto r = run({"verify", path("g.lat"), "--theorem", "converse"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("derived ': 0:1 a:g"), std::string::npos);
}

TEST_F(Cli, MeasureConditions) {
  auto r = run({"measure", path("M3A.lat"), "--s", path("s.msr"), "--check", "conditions"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_EQ(run({"measure", path("M3A.lat"), "--s", path("s.msr"), "--check", "s2"}).code, 0);
  auto w = run({"measure", path("FIG2.lat"), "--witness", "filter:a"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("e: 1\n"), std::string::npos);
  EXPECT_NE(w.out.find("b: 1/2\n"), std::string::npos);
}

TEST_F(Cli, HoldsAndEval) {
  EXPECT_EQ(run({"holds", path("M3B.lat"), "-f", "x'' = x"}).code, 1);
  EXPECT_EQ(run({"holds", path("M3B.lat"), "-f", "x <= y => x = y /\\ (x \\/ y')"}).code, 0);
  auto e = run({"eval", path("M3B.lat"), "-e", "(x \\/ y)' \\/ y", "--assign", "x=a,y=0"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "b\n");
}

// A printed counterexample reproduces through eval.
TEST_F(Cli, WitnessFeedsBackIntoEval) {
  auto r = run({"--json", "holds", path("M3B.lat"), "-f", "x'' = x"});
  auto j = nlohmann::json::parse(r.out);
  std::string x = j["witness"]["x"];
  auto lhs = run({"eval", path("M3B.lat"), "-e", "x''", "--assign", "x=" + x});
  EXPECT_NE(lhs.out, x + "\n");
}

TEST_F(Cli, DeriveWritesFile) {
  auto r = run({"derive", path("B4.lat"), "--impl", "sasaki", "--out", path("out.lat")});
  EXPECT_EQ(r.code, 0);
  auto f = womlat::read_lat(path("out.lat"));
  ASSERT_TRUE(f.arrow);
  EXPECT_EQ((*f.arrow)(1, 2), 2u);  // a -> b = a' \/ b = b
}

TEST_F(Cli, Search) {
  auto r = run({"search", "--all-n", "3", "--want", "wom,dwom", "--limit", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("matches: 2"), std::string::npos) << r.out;
  EXPECT_EQ(run({"search", "--all-n", "4", "--want", "comp,-dnl"}).code, 1);
  EXPECT_EQ(run({"search", "--lattice", path("M3A.lat"), "--want", "dwom", "--limit", "3"}).code, 0);
  EXPECT_EQ(run({"search", "--all-n", "9", "--want", "wom"}).code, 2);
}

TEST_F(Cli, DotAndFixtures) {
  auto d = run({"dot", path("B4.lat")});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("\"a\" -> \"1\";"), std::string::npos);
  auto l = run({"fixtures", "list"});
  EXPECT_NE(l.out.find("FIG2\n"), std::string::npos);
  EXPECT_EQ(run({"fixtures", "emit", "nope"}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", path("FIG2.lat")}).code, 2);
  EXPECT_EQ(run({"check", path("FIG2.lat"), "--prop", "nonsense"}).code, 2);
  EXPECT_EQ(run({"check", path("missing.lat"), "--prop", "wom"}).code, 2);
  EXPECT_EQ(run({"verify", path("FIG2.lat"), "--theorem", "nope"}).code, 2);
  EXPECT_EQ(run({"holds", path("FIG2.lat"), "-f", "x = "}).code, 2);
  write("bad.lat", "[elements] 0 a b\n[covers] 0 a ; 0 b\n");
  auto r = run({"check", path("bad.lat"), "--prop", "wom"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotALattice"), std::string::npos) << r.err;
  EXPECT_EQ(run({"verify", path("M3B.lat"), "--theorem", "w-properties"}).code, 0);
  EXPECT_EQ(run({"derive", path("M3B.lat"), "--impl", "w"}).code, 2);
}
