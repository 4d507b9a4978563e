// tests/trials_test.cc

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

#include <sstream>

#include <gtest/gtest.h>

#include "fairtrial/trials.h"
#include "support/errors.h"
#include "support/synthetic.h"

namespace fairtrial {
namespace {

constexpr char kMeta[] = "speaker_id,gender,nationality\ns,m,usa\nt,m,usa\nv,f,uk\n";
constexpr char kUtts[] =
    "s/r1/1.wav\ns/r1/2.wav\ns/r2/1.wav\ns/r3/1.wav\n"
    "t/q1/1.wav\nt/q2/1.wav\nt/q3/1.wav\nv/w1/1.wav\n";

std::vector<RawTrial> Parse(const std::string &text) {
  std::istringstream in(text);
  return ParseTrials(in);
}

TEST(ParseTrials, ReadsLabelsAndPaths) {
  auto t = Parse("1 a/r/1.wav a/r/2.wav\n0\tb/r/1.wav   c/r/1.wav\n\n");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(t[0].target);
  EXPECT_FALSE(t[1].target);
  EXPECT_EQ(t[1].test, "c/r/1.wav");
}

TEST(ParseTrials, RejectsBadLines) {
  EXPECT_ERROR_KIND(Parse("2 a b\n"), ErrorKind::kFormat);
  EXPECT_ERROR_KIND(Parse("1 a\n"), ErrorKind::kFormat);
  EXPECT_ERROR_KIND(Parse("1 a b c\n"), ErrorKind::kFormat);
}

TEST(FormatTrials, RoundTripsThroughResolve) {
  Corpus c = testing::CorpusFromText(kMeta, kUtts);
  std::vector<TrialPair> pairs{
      {"s/r1/1.wav", "s/r2/1.wav", PairKind::kSameSpeaker, Grade::kMedium},
      {"s/r1/1.wav", "t/q1/1.wav", PairKind::kDifferentSpeaker, Grade::kHard},
  };
  std::string text = FormatTrials(pairs);
  EXPECT_EQ(text, "1 s/r1/1.wav s/r2/1.wav\n0 s/r1/1.wav t/q1/1.wav\n");
  auto raw = Parse(text);
  EXPECT_EQ(ResolveTrials(c, raw), pairs);
}

TEST(ResolveTrials, LabelMustMatchSpeakers) {
  Corpus c = testing::CorpusFromText(kMeta, kUtts);
  auto raw = Parse("0 s/r1/1.wav s/r2/1.wav\n");
  EXPECT_ERROR_KIND(ResolveTrials(c, raw), ErrorKind::kInvalidPair);
}

TEST(GradeTrialList, CountsCells) {
  Corpus c = testing::CorpusFromText(kMeta, kUtts);
  std::vector<TrialPair> pairs;
  for (const char *u : {"t/q1/1.wav", "t/q2/1.wav", "t/q3/1.wav"})
    pairs.push_back({"s/r1/1.wav", u, PairKind::kDifferentSpeaker, Grade::kHard});
  pairs.push_back({"s/r1/1.wav", "s/r2/1.wav", PairKind::kSameSpeaker, Grade::kMedium});
  pairs.push_back({"s/r1/2.wav", "s/r3/1.wav", PairKind::kSameSpeaker, Grade::kMedium});
  pairs.push_back({"t/q1/1.wav", "t/q2/1.wav", PairKind::kSameSpeaker, Grade::kMedium});
  GradeHistogram h = GradeTrialList(c, pairs);
  GradeCounts expected{{{PairKind::kDifferentSpeaker, Grade::kHard}, 3},
                       {{PairKind::kSameSpeaker, Grade::kMedium}, 3}};
  EXPECT_EQ(h.total, expected);
  EXPECT_EQ(h.size(), 6u);
  EXPECT_EQ(h.per_speaker.at("s").at({PairKind::kSameSpeaker, Grade::kMedium}), 2u);
  EXPECT_EQ(h.per_speaker.at("t").at({PairKind::kSameSpeaker, Grade::kMedium}), 1u);
}

TEST(GradeTrialList, RegradesWithinRecordingPairs) {
  Corpus c = testing::CorpusFromText(kMeta, kUtts);
  std::vector<TrialPair> pairs{
      {"s/r1/1.wav", "s/r1/2.wav", PairKind::kSameSpeaker, Grade::kMedium},
      {"s/r1/1.wav", "s/r2/1.wav", PairKind::kSameSpeaker, Grade::kMedium},
      {"s/r1/2.wav", "s/r3/1.wav", PairKind::kSameSpeaker, Grade::kMedium},
      {"s/r2/1.wav", "s/r3/1.wav", PairKind::kSameSpeaker, Grade::kMedium},
  };
  GradeCounts expected{{{PairKind::kSameSpeaker, Grade::kTrivial}, 1},
                       {{PairKind::kSameSpeaker, Grade::kMedium}, 3}};
  EXPECT_EQ(GradeTrialList(c, pairs).total, expected);
}

TEST(GradeTrialList, EmptyList) {
  Corpus c = testing::CorpusFromText(kMeta, kUtts);
  GradeHistogram h = GradeTrialList(c, {});
  EXPECT_TRUE(h.total.empty());
  EXPECT_EQ(h.size(), 0u);
}

}  // namespace
}  // namespace fairtrial
