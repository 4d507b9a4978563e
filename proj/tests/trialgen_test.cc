// tests/trialgen_test.cc

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

#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fairtrial/hashing.h"
#include "fairtrial/trialgen.h"
#include "support/errors.h"
#include "support/synthetic.h"

namespace fairtrial {
namespace {

using testing::CorpusFromText;

std::string SpeakerUtts(const std::string &sid, const std::vector<std::size_t> &per_recording) {
  std::ostringstream out;
  for (std::size_t r = 0; r < per_recording.size(); ++r)
    for (std::size_t u = 0; u < per_recording[r]; ++u)
      out << sid << "/" << sid << "_r" << r << "/" << u << ".wav\n";
  return out.str();
}

TEST(EnumerateSameSpeakerPairs, SkipsWithinRecording) {
  Corpus c = CorpusFromText("speaker_id,gender,nationality\ns,m,usa\n",
                            "s/recA/a1.wav\ns/recA/a2.wav\ns/recB/b1.wav\n");
  auto pairs = EnumerateSameSpeakerPairs(c, "s");
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].enroll, "s/recA/a1.wav");
  EXPECT_EQ(pairs[0].test, "s/recB/b1.wav");
  EXPECT_EQ(pairs[1].enroll, "s/recA/a2.wav");
  EXPECT_EQ(pairs[1].test, "s/recB/b1.wav");
  EXPECT_EQ(CountSameSpeakerPairs(c, "s"), 2u);
}

TEST(EnumerateSameSpeakerPairs, OnePerRecording) {
  Corpus c = CorpusFromText("speaker_id,gender,nationality\ns,m,usa\n",
                            "s/A/a1.wav\ns/B/b1.wav\ns/C/c1.wav\n");
  EXPECT_EQ(EnumerateSameSpeakerPairs(c, "s").size(), 3u);
  EXPECT_EQ(CountSameSpeakerPairs(c, "s"), 3u);
}

TEST(EnumerateSameSpeakerPairs, SingleRecording) {
  Corpus c = CorpusFromText("speaker_id,gender,nationality\ns,m,usa\n",
                            "s/A/a1.wav\ns/A/a2.wav\ns/A/a3.wav\n");
  EXPECT_TRUE(EnumerateSameSpeakerPairs(c, "s").empty());
}

TEST(EnumerateSameSpeakerPairs, CountMatchesEnumeration) {
  Corpus c = testing::ThreeGroupCorpus();
  for (const Speaker &s : c.speakers())
    EXPECT_EQ(CountSameSpeakerPairs(c, s.id), EnumerateSameSpeakerPairs(c, s.id).size());
}

TEST(CountDifferentSpeakerCandidates, MatchesBruteForce) {
  Corpus c = testing::ThreeGroupCorpus();
  const auto &utts = c.utterances();
  for (const std::string &sid : {std::string("canada_m003"), std::string("india_f009")}) {
    std::size_t brute = 0;
    GroupKey g = *c.GroupOf(sid);
    for (const Utterance &a : utts)
      for (const Utterance &b : utts)
        if (a.speaker_id == sid && b.speaker_id != sid && c.GroupOf(b.speaker_id) == g &&
            a.recording_id != b.recording_id)
          ++brute;
    EXPECT_EQ(CountDifferentSpeakerCandidates(c, sid), brute);
  }
}

class EligibilityTest : public ::testing::Test {
 protected:
  // x: 30 cross-recording pairs (three singletons plus a 9-utterance
  // recording), 12 x 50 = 600 different candidates against y.
  Corpus corpus_ = CorpusFromText(
      "speaker_id,gender,nationality\nx,m,usa\ny,m,usa\nz,f,usa\nw,m,uk\nq,?,uk\n",
      SpeakerUtts("x", {1, 1, 1, 9}) + SpeakerUtts("y", {10, 10, 10, 10, 10}) +
          SpeakerUtts("z", {3, 3}) + SpeakerUtts("w", {1}) + SpeakerUtts("q", {2, 2}));

  std::optional<ExclusionReason> ReasonFor(const Eligibility &e, const std::string &id) {
    for (const Exclusion &x : e.excluded)
      if (x.speaker_id == id) return x.reason;
    return std::nullopt;
  }
};

TEST_F(EligibilityTest, CountsAreAsConstructed) {
  EXPECT_EQ(CountSameSpeakerPairs(corpus_, "x"), 30u);
  EXPECT_EQ(CountDifferentSpeakerCandidates(corpus_, "x"), 600u);
}

TEST_F(EligibilityTest, ThresholdBothDirections) {
  GenerationConfig cfg;
  cfg.n = 100;
  Eligibility e = EligibleSpeakers(corpus_, cfg);
  EXPECT_EQ(ReasonFor(e, "x"), ExclusionReason::kInsufficientSamePairs);
  cfg.n = 25;
  e = EligibleSpeakers(corpus_, cfg);
  EXPECT_TRUE(std::find(e.included.begin(), e.included.end(), "x") != e.included.end());
  cfg.n = 30;
  e = EligibleSpeakers(corpus_, cfg);
  EXPECT_TRUE(std::find(e.included.begin(), e.included.end(), "x") != e.included.end());
  cfg.n = 31;
  e = EligibleSpeakers(corpus_, cfg);
  EXPECT_EQ(ReasonFor(e, "x"), ExclusionReason::kInsufficientSamePairs);
}

TEST_F(EligibilityTest, ExclusionReasons) {
  GenerationConfig cfg;
  cfg.n = 9;
  Eligibility e = EligibleSpeakers(corpus_, cfg);
  EXPECT_EQ(ReasonFor(e, "z"), ExclusionReason::kNoGroupPartners);
  EXPECT_EQ(ReasonFor(e, "w"), ExclusionReason::kInsufficientSamePairs);
  EXPECT_EQ(ReasonFor(e, "q"), ExclusionReason::kUngradeable);
  // y: 1000 same pairs but only 50 x 12 = 600 candidates.
  cfg.n = 600;
  e = EligibleSpeakers(corpus_, cfg);
  EXPECT_EQ(ReasonFor(e, "y"), ExclusionReason::kInsufficientDifferentPairs);
  cfg.n = 599;
  e = EligibleSpeakers(corpus_, cfg);
  EXPECT_FALSE(ReasonFor(e, "y").has_value());
}

// Sequential replay of the sampling protocol: same pairs by a partial
// Fisher-Yates over the enumerated pool, different pairs by rejection
// against every pair drawn so far in the whole list.
std::vector<TrialPair> ReplayGenerate(const Corpus &c, std::size_t n, uint64_t seed,
                                      const std::vector<std::string> &speakers) {
  const auto &utts = c.utterances();
  std::vector<TrialPair> out;
  std::set<std::pair<std::string, std::string>> claimed;
  for (const std::string &sid : speakers) {
    Rng rng(DeriveSeed(seed, sid));
    std::vector<std::size_t> own, pool;
    for (std::size_t i = 0; i < utts.size(); ++i) {
      if (utts[i].speaker_id == sid)
        own.push_back(i);
      else if (c.GroupOf(utts[i].speaker_id) == c.GroupOf(sid))
        pool.push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> same;
    for (std::size_t i = 0; i < own.size(); ++i)
      for (std::size_t j = i + 1; j < own.size(); ++j)
        if (utts[own[i]].recording_id != utts[own[j]].recording_id)
          same.emplace_back(own[i], own[j]);
    for (std::size_t k = 0; k < n; ++k)
      std::swap(same[k], same[k + UniformIndex(rng, same.size() - k)]);
    for (std::size_t k = 0; k < n; ++k)
      out.push_back({utts[same[k].first].id, utts[same[k].second].id, PairKind::kSameSpeaker,
                     Grade::kMedium});
    std::size_t got = 0, draws = 0;
    std::vector<TrialPair> block;
    while (got < n && draws++ < kDrawBudgetFactor * n) {
      std::size_t e = own[UniformIndex(rng, own.size())];
      std::size_t t = pool[UniformIndex(rng, pool.size())];
      if (utts[e].recording_id == utts[t].recording_id) continue;
      auto key = std::minmax(utts[e].id, utts[t].id);
      if (!claimed.insert({key.first, key.second}).second) continue;
      block.push_back({utts[e].id, utts[t].id, PairKind::kDifferentSpeaker, Grade::kHard});
      ++got;
    }
    if (got < n) {
      // Excluded; its claims are released.
      for (const TrialPair &p : block) {
        auto key = std::minmax(p.enroll, p.test);
        claimed.erase({key.first, key.second});
      }
      out.resize(out.size() - n);
      continue;
    }
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

class MiniGenerateTest : public ::testing::Test {
 protected:
  Corpus corpus_ = CorpusFromText("speaker_id,gender,nationality\na,f,india\nb,f,india\nc,f,india\n",
                                  SpeakerUtts("a", {2, 1}) + SpeakerUtts("b", {2, 1}) +
                                      SpeakerUtts("c", {2, 1}));
};

TEST_F(MiniGenerateTest, HandCheckableList) {
  GenerationConfig cfg;
  cfg.n = 2;
  cfg.seed = 7;
  TrialList list = Generate(corpus_, cfg, 1);
  ASSERT_EQ(list.pairs.size(), 12u);
  EXPECT_EQ(list.included_speakers, (std::vector<std::string>{"a", "b", "c"}));
  // Each speaker has exactly two cross-recording pairs, so all six appear.
  for (const char *s : {"a", "b", "c"}) {
    for (const TrialPair &p : EnumerateSameSpeakerPairs(corpus_, s)) {
      auto hits = std::count_if(list.pairs.begin(), list.pairs.end(), [&](const TrialPair &q) {
        return q.enroll == p.enroll && q.test == p.test;
      });
      EXPECT_EQ(hits, 1) << p.enroll << " " << p.test;
    }
  }
  std::size_t diff = 0;
  for (const TrialPair &p : list.pairs) {
    EXPECT_EQ(GradePair(corpus_, p.enroll, p.test), (PairGrade{p.kind, p.grade}));
    if (p.kind == PairKind::kDifferentSpeaker) {
      ++diff;
      EXPECT_EQ(p.grade, Grade::kHard);
    }
  }
  EXPECT_EQ(diff, 6u);
}

TEST_F(MiniGenerateTest, MatchesReplay) {
  for (uint64_t seed : {0ULL, 3ULL, 6ULL, 8ULL, 12ULL, 20ULL}) {
    GenerationConfig cfg;
    cfg.n = 2;
    cfg.seed = seed;
    EXPECT_EQ(Generate(corpus_, cfg, 2).pairs, ReplayGenerate(corpus_, 2, seed, {"a", "b", "c"}))
        << "seed " << seed;
  }
}

TEST(Generate, MatchesReplayOnLargerCorpus) {
  // A tight group forces cross-block clashes.
  Corpus c = testing::SyntheticCorpus({{"peru", Gender::kMale, 6}}, 3, 1);
  GenerationConfig cfg;
  cfg.n = 3;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    TrialList list = Generate(c, cfg, 4);
    EXPECT_EQ(list.pairs, ReplayGenerate(c, 3, seed, EligibleSpeakers(c, cfg).included)) << seed;
  }
}

void CheckContract(const Corpus &c, const TrialList &list, std::size_t n) {
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per;
  for (const TrialPair &p : list.pairs) {
    PairGrade g = GradePair(c, p.enroll, p.test);
    EXPECT_EQ(g.kind, p.kind);
    EXPECT_EQ(g.grade, p.kind == PairKind::kSameSpeaker ? Grade::kMedium : Grade::kHard);
    auto key = std::minmax(p.enroll, p.test);
    EXPECT_TRUE(seen.insert({key.first, key.second}).second) << p.enroll << " " << p.test;
    auto &cnt = per[c.GetUtterance(p.enroll).speaker_id];
    (p.target() ? cnt.first : cnt.second)++;
  }
  EXPECT_EQ(per.size(), list.included_speakers.size());
  for (const auto &[sid, cnt] : per) {
    EXPECT_EQ(cnt.first, n) << sid;
    EXPECT_EQ(cnt.second, n) << sid;
  }
}

TEST(Generate, ContractOnSyntheticCorpus) {
  Corpus c = testing::ThreeGroupCorpus();
  for (std::size_t n : {2u, 10u, 50u}) {
    GenerationConfig cfg;
    cfg.n = n;
    cfg.seed = 3;
    TrialList list = Generate(c, cfg);
    EXPECT_EQ(list.included_speakers.size(), 30u);
    CheckContract(c, list, n);
  }
}

TEST(Generate, DeterministicAndThreadInvariant) {
  Corpus c = testing::ThreeGroupCorpus();
  GenerationConfig cfg;
  cfg.n = 10;
  cfg.seed = 12;
  std::string once = FormatTrials(Generate(c, cfg, 1).pairs);
  EXPECT_EQ(FormatTrials(Generate(c, cfg, 1).pairs), once);
  EXPECT_EQ(FormatTrials(Generate(c, cfg, 8).pairs), once);
}

TEST(Generate, SeedsChangePairsNotCounts) {
  Corpus c = testing::ThreeGroupCorpus();
  GenerationConfig cfg;
  cfg.n = 10;
  cfg.seed = 3;
  TrialList a = Generate(c, cfg);
  cfg.seed = 6;
  TrialList b = Generate(c, cfg);
  EXPECT_EQ(a.pairs.size(), b.pairs.size());
  EXPECT_EQ(a.included_speakers, b.included_speakers);
  EXPECT_NE(a.pairs, b.pairs);
}

TEST(Generate, Errors) {
  Corpus c = testing::ThreeGroupCorpus();
  GenerationConfig cfg;
  cfg.n = 0;
  EXPECT_ERROR_KIND(Generate(c, cfg), ErrorKind::kInvalidArgument);
  cfg.n = 1000;
  EXPECT_ERROR_KIND(Generate(c, cfg), ErrorKind::kNoEligibleSpeakers);
}

TEST(Generate, TightGroupsKeepContract) {
  Corpus c = testing::SyntheticCorpus({{"chile", Gender::kFemale, 4}}, 3, 1);
  GenerationConfig cfg;
  cfg.n = 3;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    cfg.seed = seed;
    TrialList list = Generate(c, cfg);
    EXPECT_EQ(list.included_speakers.size() + list.excluded_speakers.size(), 4u);
    for (const Exclusion &e : list.excluded_speakers)
      EXPECT_EQ(e.reason, ExclusionReason::kPairExhaustion);
    CheckContract(c, list, 3);
    EXPECT_EQ(list.pairs, ReplayGenerate(c, 3, seed, EligibleSpeakers(c, cfg).included));
  }
}

TEST(GenerateVariants, OnePerSeed) {
  Corpus c = testing::ThreeGroupCorpus();
  GenerationConfig cfg;
  cfg.n = 5;
  std::vector<uint64_t> seeds{3, 6, 8, 12, 20};
  auto lists = GenerateVariants(c, cfg, seeds);
  ASSERT_EQ(lists.size(), 5u);
  for (const TrialList &l : lists) EXPECT_EQ(l.pairs.size(), lists[0].pairs.size());
  std::vector<uint64_t> one{6};
  cfg.seed = 6;
  EXPECT_EQ(GenerateVariants(c, cfg, one)[0].pairs, Generate(c, cfg).pairs);
  std::vector<uint64_t> dup{4, 4};
  EXPECT_ERROR_KIND(GenerateVariants(c, cfg, dup), ErrorKind::kInvalidArgument);
}

}  // namespace
}  // namespace fairtrial
