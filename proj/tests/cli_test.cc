// tests/cli_test.cc

// Copyright 2026  The fairtrial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fairtrial/cli.h"
#include "fairtrial/text_io.h"
#include "json.hpp"
#include "support/synthetic.h"
#include "support/violations.h"

namespace fairtrial {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::Dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fairtrial_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    auto text = testing::SyntheticCorpusText(
        {{"usa", Gender::kMale, 4}, {"uk", Gender::kFemale, 4}}, 4, 3);
    WriteFileAtomic(Path("meta.csv"), text.metadata);
    WriteFileAtomic(Path("utts.txt"), text.utterances);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const { return (dir_ / name).string(); }
  std::vector<std::string> WithCorpus(std::vector<std::string> args) const {
    args.insert(args.end(), {"--meta", Path("meta.csv"), "--utts", Path("utts.txt")});
    return args;
  }

  fs::path dir_;
};

TEST_F(CliTest, UnknownSubcommand) {
  CliRun r = Cli({"frobnicate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("generate"), std::string::npos);
}

TEST_F(CliTest, NoSubcommandIsUsageError) { EXPECT_EQ(Cli({}).code, 1); }

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(Cli({"--help"}).code, 0); }

TEST_F(CliTest, MissingRequiredOption) { EXPECT_EQ(Cli({"generate", "--n", "3"}).code, 1); }

TEST_F(CliTest, DataErrorsExitTwo) {
  WriteFileAtomic(Path("bad.csv"), "speaker_id,gender\ns,m\n");
  CliRun r = Cli({"generate", "--meta", Path("bad.csv"), "--utts", Path("utts.txt"), "--out",
               Path("t.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error[format]"), std::string::npos) << r.err;
  r = Cli(WithCorpus({"generate", "--n", "5000", "--out", Path("t.txt")}));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error[no-eligible-speakers]"), std::string::npos) << r.err;
}

TEST_F(CliTest, GenerateThenEval) {
  CliRun g = Cli(WithCorpus({"generate", "--n", "6", "--seed", "3", "--out", Path("trials.txt")}));
  ASSERT_EQ(g.code, 0) << g.err;
  CliRun s = Cli(WithCorpus({"simulate-scores", "--trials", Path("trials.txt"), "--out",
                      Path("scores.txt")}));
  ASSERT_EQ(s.code, 0) << s.err;
  CliRun e = Cli(WithCorpus({"eval", "--trials", Path("trials.txt"), "--scores", Path("scores.txt"),
                      "--out", Path("eval")}));
  ASSERT_EQ(e.code, 0) << e.err;

  auto gm = nlohmann::json::parse(ReadFile(Path("trials.txt.manifest.json")));
  auto em = nlohmann::json::parse(ReadFile(Path("eval/manifest.json")));
  EXPECT_EQ(gm["run"]["inputs"]["meta"]["fnv1a64"], em["run"]["inputs"]["meta"]["fnv1a64"]);
  EXPECT_EQ(gm["run"]["inputs"]["utts"]["fnv1a64"], em["run"]["inputs"]["utts"]["fnv1a64"]);
  EXPECT_EQ(gm["generation"]["included_speakers"].size(), 8u);

  auto report = nlohmann::json::parse(ReadFile(Path("eval/report.json")));
  EXPECT_TRUE(report.dump().find("male:usa") != std::string::npos);
  EXPECT_TRUE(fs::exists(Path("eval/det_points.tsv")));

  CliRun v = Cli(WithCorpus({"validate", "--trials", Path("trials.txt"), "--min-diff-pairs", "6"}));
  EXPECT_EQ(v.code, 0) << v.err;
  CliRun h = Cli(WithCorpus({"grade", "--trials", Path("trials.txt"), "--format", "tsv"}));
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("different_speaker\tcat4_hard\t48"), std::string::npos) << h.out;
}

TEST_F(CliTest, RegenerationIsByteIdentical) {
  ASSERT_EQ(Cli(WithCorpus({"generate", "--n", "4", "--out", Path("a.txt")})).code, 0);
  ASSERT_EQ(Cli(WithCorpus({"--threads", "3", "generate", "--n", "4", "--out", Path("b.txt")})).code,
            0);
  EXPECT_EQ(ReadFile(Path("a.txt")), ReadFile(Path("b.txt")));
}

TEST_F(CliTest, ValidateNamesOffender) {
  ASSERT_EQ(Cli(WithCorpus({"generate", "--n", "6", "--out", Path("trials.txt")})).code, 0);
  fairtrial::Corpus c = LoadCorpus(Path("meta.csv"), Path("utts.txt"));
  auto pairs = ResolveTrials(c, ReadTrialFile(Path("trials.txt")));
  pairs = testing::UnequalTotals(c, pairs, "uk_f002");
  WriteFileAtomic(Path("bad.txt"), FormatTrials(pairs));
  CliRun v = Cli(WithCorpus({"validate", "--trials", Path("bad.txt"), "--min-diff-pairs", "5"}));
  EXPECT_EQ(v.code, 2);
  EXPECT_NE(v.err.find("error[guideline-violation]"), std::string::npos) << v.err;
  EXPECT_NE(v.err.find("uk_f002"), std::string::npos) << v.err;
}

TEST_F(CliTest, VariantsAndRobustness) {
  CliRun v = Cli(WithCorpus({"variants", "--n", "3", "--seeds", "3,6", "--out", Path("var")}));
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(fs::exists(Path("var/trials_seed3.txt")));
  EXPECT_TRUE(fs::exists(Path("var/trials_seed6.txt")));
  EXPECT_TRUE(fs::exists(Path("var/manifest.json")));

  CliRun r = Cli(WithCorpus({"robustness", "--n", "3,6", "--seeds", "1,2,3", "--out", Path("rob")}));
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char *f : {"grid.json", "grid.tsv", "spread.json", "spread.tsv", "det_bands.tsv",
                        "manifest.json"})
    EXPECT_TRUE(fs::exists(Path(std::string("rob/") + f))) << f;
}

TEST_F(CliTest, StatsToStdout) {
  CliRun s = Cli(WithCorpus({"stats"}));
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("usa"), std::string::npos);
  EXPECT_NE(s.err.find("manifest"), std::string::npos);
}

}  // namespace
}  // namespace fairtrial
