// Copyright 2026 The Authors.
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "binmat/catalog.hpp"
#include "binmat/io.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/split_ops.hpp"
#include "nlohmann/json.hpp"

namespace binmat {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("binmat_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string exported(const std::string& name) {
    const auto p = path(name + ".txt");
    EXPECT_EQ(run({"catalog", "export", name, p}).code, cli::kExitOk);
    return p;
  }
  fs::path dir_;
};

TEST_F(CliTest, InfoOnG4) {
  const auto r = run({"info", exported("G_4")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("rank:             1"), std::string::npos);
  EXPECT_NE(r.out.find("cocircuits:       {x,y,z}"), std::string::npos);
}

TEST_F(CliTest, InfoOnFAsJson) {
  const auto r = run({"--json", "info", exported("F")});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["operation"], "info");
}

TEST_F(CliTest, MalformedRowReportsLine) {
  write_text_file(path("bad.txt"), "elements a b c\nrow 111\nrow 11\n");
  const auto r = run({"info", path("bad.txt")});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST_F(CliTest, ThreefoldReproducesMatrixD) {
  const auto r = run({"threefold", exported("G_4"), "--x", "x", "--y", "y"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "elements x y z p q r\nrow 111000\nrow 110101\nrow 100011\n");
}

TEST_F(CliTest, ThreefoldSuffixesCollidingLabels) {
  write_text_file(path("m.txt"), "elements x y p\nrow 111\n");
  const auto r = run({"threefold", path("m.txt"), "--x", "x", "--y", "y"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto m = parse_matroid(r.out);
  EXPECT_EQ(m.size(), 6u);
  // only the colliding label gets a suffix
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"x", "y", "p", "p1", "q", "r"}));
}

TEST_F(CliTest, ThreefoldPreconditionIsVerbatim) {
  write_text_file(path("m.txt"), "elements x y\nrow 10\nrow 01\n");
  const auto r = run({"threefold", path("m.txt"), "--x", "x", "--y", "y"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("{x,y} not a proper subset of any cocircuit"), std::string::npos);
}

TEST_F(CliTest, SplitAppendsRow) {
  const auto r = run({"split", exported("G_4"), "--t", "x"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "elements x y z\nrow 111\nrow 100\n");
}

TEST_F(CliTest, EsplitThenDeleteEqualsSplit) {
  const auto g4 = exported("G_4");
  ASSERT_EQ(run({"esplit", g4, "--t", "x,y", "--new", "a", "-o", path("es.txt")}).code, 0);
  const auto del = run({"delete", path("es.txt"), "--s", "a"});
  const auto split = run({"split", g4, "--t", "x,y"});
  ASSERT_EQ(del.code, 0);
  EXPECT_TRUE(parse_matroid(del.out).represented_equal(parse_matroid(split.out)));
}

TEST_F(CliTest, PipedMinorSearch) {
  const auto d = run({"threefold", exported("G_4"), "--x", "x", "--y", "y"});
  const auto r = run({"minor", "-", "--pattern", "K4"}, d.out);
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.find("absent"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"--json", "minor", "-", "--pattern", "K4"}, d.out).out);
  EXPECT_FALSE(j["witness"].is_null());
}

TEST_F(CliTest, MinorErrors) {
  const auto g4 = exported("G_4");
  EXPECT_EQ(run({"minor", g4, "--pattern", "NoSuchThing"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"minor", g4, "--pattern", "G_4", "--pin", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"minor", g4, "--pattern", "G_4", "--pin", "w=x"}).code, cli::kExitUsage);
  const auto absent = run({"minor", g4, "--pattern", "K4"});
  EXPECT_EQ(absent.code, cli::kExitOk);
  EXPECT_NE(absent.out.find("absent"), std::string::npos);
}

TEST_F(CliTest, GammoidAndIso) {
  const auto g = nlohmann::json::parse(run({"--json", "gammoid", exported("G_4")}).out);
  EXPECT_EQ(g["gammoid"], true);
  const auto iso =
      nlohmann::json::parse(run({"--json", "iso", exported("Q_3"), exported("Q_4")}).out);
  EXPECT_EQ(iso["isomorphic"], true);
  EXPECT_EQ(iso["bijection"].size(), 5u);
}

TEST_F(CliTest, UnknownLabelIsAUsageError) {
  EXPECT_EQ(run({"split", exported("G_4"), "--t", "w"}).code, cli::kExitUsage);
}

TEST_F(CliTest, CatalogListShowExport) {
  const auto list = run({"catalog", "list"});
  for (const auto& n : catalog_names()) {
    EXPECT_NE(list.out.find(n), std::string::npos) << n;
  }
  const auto show = run({"catalog", "show", "F_1"});
  EXPECT_NE(show.out.find("marked: (x,y,z)"), std::string::npos);
  EXPECT_EQ(run({"catalog", "show", "nope"}).code, cli::kExitUsage);
  const auto back = parse_matroid(read_text_file(exported("F_1")));
  EXPECT_TRUE(back.represented_equal(catalog_get("F_1").matroid));
  const auto dot = run({"catalog", "export", "F_1", "-", "--format", "dot"});
  EXPECT_NE(dot.out.find("graph \"F_1\""), std::string::npos);
}

TEST_F(CliTest, OutputRoundTripsForEveryCommand) {
  const auto f1 = exported("F_1");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"split", f1, "--t", "x,left"},
           {"esplit", f1, "--t", "x", "--new", "n"},
           {"threefold", f1, "--x", "x", "--y", "y"},
           {"delete", f1, "--s", "left"},
           {"contract", f1, "--s", "left"}}) {
    auto json_args = args;
    json_args.insert(json_args.begin(), "--json");
    const auto r = run(json_args);
    ASSERT_EQ(r.code, 0) << args[0];
    const auto j = nlohmann::json::parse(r.out);
    const auto text = run(args).out;
    EXPECT_EQ(j["output"].get<std::string>(), text) << args[0];
    EXPECT_EQ(format_matroid(parse_matroid(text)), text) << args[0];
  }
}

TEST_F(CliTest, VerifyMainPasses) {
  const auto r = run({"verify", "--check", "main", "--max-elements", "6",
                      "--report-dir", path("rep")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(fs::exists(path("rep/main.json")));
  EXPECT_TRUE(fs::exists(path("rep/main.txt")));
}

TEST_F(CliTest, VerifyQuotientsReportsTheThreeClasses) {
  const auto r = run({"verify", "--check", "quotients"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("quotients"), std::string::npos);
}

TEST_F(CliTest, VerifyGfEmptyFailsAndReplays) {
  const auto r = run({"verify", "--check", "gf-empty", "--max-elements", "6",
                      "--report-dir", path("rep")});
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  const auto replay = run({"replay", path("rep/gf1-empty.json")});
  EXPECT_EQ(replay.code, cli::kExitOk);
}

TEST_F(CliTest, VerifyListNamesEveryCheck) {
  const auto r = run({"verify", "--check", "list"});
  EXPECT_EQ(r.code, cli::kExitOk);
  for (const char* c : {"catalog", "quotients", "gf-empty", "thm43", "thm15", "main",
                        "esplit", "ghafari", "structure"}) {
    EXPECT_NE(r.out.find(c), std::string::npos) << c;
  }
}

TEST_F(CliTest, VerifyBoundsAreChecked) {
  EXPECT_EQ(run({"verify", "--check", "main", "--max-elements", "12"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "main", "--max-rank", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "bogus"}).code, cli::kExitUsage);
}

TEST_F(CliTest, VerifyCorpusFileRoundTrip) {
  ASSERT_EQ(run({"verify", "--check", "esplit", "--max-elements", "4",
                 "--write-corpus", path("c.txt")})
                .code,
            0);
  EXPECT_EQ(run({"verify", "--check", "esplit", "--corpus", path("c.txt")}).code, 0);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"info", path("missing.txt")}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace binmat
