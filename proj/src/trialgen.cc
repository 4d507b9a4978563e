// src/trialgen.cc

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

#include "fairtrial/trialgen.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "fairtrial/error.h"
#include "fairtrial/hashing.h"
#include "fairtrial/parallel.h"

namespace fairtrial {

std::string_view ToString(GroupPolicy policy) {
  switch (policy) {
    case GroupPolicy::kSameGenderAndNationality: return "same_gender_and_nationality";
  }
  return "unknown";
}

std::string_view ToString(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::kUngradeable: return "ungradeable-attributes";
    case ExclusionReason::kInsufficientSamePairs: return "insufficient-same-pairs";
    case ExclusionReason::kNoGroupPartners: return "no-group-partners";
    case ExclusionReason::kInsufficientDifferentPairs: return "insufficient-different-pairs";
    case ExclusionReason::kPairExhaustion: return "pair-exhaustion";
  }
  return "unknown";
}

namespace {

// Unordered pair of utterance indices.
using PairKey = std::pair<std::size_t, std::size_t>;

PairKey MakeKey(std::size_t a, std::size_t b) {
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

struct PairKeyHash {
  std::size_t operator()(const PairKey &k) const {
    return static_cast<std::size_t>(SplitMix64(k.first * 0x9e3779b97f4a7c15ULL ^ k.second));
  }
};

using PairSet = std::unordered_set<PairKey, PairKeyHash>;

// Per-speaker generation state. The stream outlives the first pass so that
// cross-block clashes are resolved by continuing the same stream.
struct SpeakerDraw {
  Rng rng;
  std::vector<TrialPair> same;
  std::vector<PairKey> diff;
  PairSet diff_seen;
  std::vector<std::size_t> own;
  std::vector<std::size_t> pool;
  std::size_t draws = 0;
};

// Draws until `draw.diff` holds n pairs or the budget is spent. `taken`
// holds pairs already claimed by earlier speaker blocks.
void DrawDifferentPairs(const Corpus &corpus, std::size_t n, SpeakerDraw &draw,
                        const PairSet *taken) {
  const auto &utts = corpus.utterances();
  const std::size_t budget = kDrawBudgetFactor * n;
  while (draw.diff.size() < n && draw.draws < budget) {
    ++draw.draws;
    std::size_t e = draw.own[UniformIndex(draw.rng, draw.own.size())];
    std::size_t t = draw.pool[UniformIndex(draw.rng, draw.pool.size())];
    if (utts[e].recording_id == utts[t].recording_id) continue;
    PairKey key = MakeKey(e, t);
    if (draw.diff_seen.count(key) || (taken && taken->count(key))) continue;
    draw.diff_seen.insert(key);
    draw.diff.push_back({e, t});
  }
}

}  // namespace

std::vector<TrialPair> EnumerateSameSpeakerPairs(const Corpus &corpus,
                                                 std::string_view speaker_id) {
  const auto &own = corpus.UtteranceIndicesOf(speaker_id);
  const auto &utts = corpus.utterances();
  std::vector<TrialPair> pairs;
  for (std::size_t i = 0; i < own.size(); ++i)
    for (std::size_t j = i + 1; j < own.size(); ++j) {
      const Utterance &a = utts[own[i]];
      const Utterance &b = utts[own[j]];
      if (a.recording_id == b.recording_id) continue;
      pairs.push_back({a.id, b.id, PairKind::kSameSpeaker, Grade::kMedium});
    }
  return pairs;
}

std::size_t CountSameSpeakerPairs(const Corpus &corpus, std::string_view speaker_id) {
  const auto &own = corpus.UtteranceIndicesOf(speaker_id);
  std::unordered_map<std::string, std::size_t> per_recording;
  for (std::size_t i : own) ++per_recording[corpus.utterances()[i].recording_id];
  std::size_t k = own.size();
  std::size_t total = k < 2 ? 0 : k * (k - 1) / 2;
  for (const auto &[rec, m] : per_recording) total -= m * (m - 1) / 2;
  return total;
}

std::size_t CountDifferentSpeakerCandidates(const Corpus &corpus,
                                            std::string_view speaker_id) {
  auto group = corpus.GroupOf(speaker_id);
  if (!group) return 0;
  std::vector<std::size_t> pool = corpus.GroupPool(*group, speaker_id);
  std::unordered_map<std::string, std::size_t> pool_recordings;
  for (std::size_t i : pool) ++pool_recordings[corpus.utterances()[i].recording_id];
  const auto &own = corpus.UtteranceIndicesOf(speaker_id);
  std::size_t total = own.size() * pool.size();
  for (std::size_t i : own) {
    auto it = pool_recordings.find(corpus.utterances()[i].recording_id);
    if (it != pool_recordings.end()) total -= it->second;
  }
  return total;
}

Eligibility EligibleSpeakers(const Corpus &corpus, const GenerationConfig &config) {
  Eligibility result;
  for (const Speaker &s : corpus.speakers()) {
    if (!s.gradeable()) {
      result.excluded.push_back({s.id, ExclusionReason::kUngradeable});
      continue;
    }
    if (CountSameSpeakerPairs(corpus, s.id) < config.n) {
      result.excluded.push_back({s.id, ExclusionReason::kInsufficientSamePairs});
      continue;
    }
    const auto &members = corpus.groups().at(GroupKey{s.gender, s.nationality});
    if (members.size() < 2) {
      result.excluded.push_back({s.id, ExclusionReason::kNoGroupPartners});
      continue;
    }
    if (CountDifferentSpeakerCandidates(corpus, s.id) <= config.n) {
      result.excluded.push_back({s.id, ExclusionReason::kInsufficientDifferentPairs});
      continue;
    }
    result.included.push_back(s.id);
  }
  return result;
}

TrialList Generate(const Corpus &corpus, const GenerationConfig &config,
                   unsigned threads) {
  if (config.n == 0)
    throw Error(ErrorKind::kInvalidArgument, "n must be at least 1");
  const std::size_t n = config.n;
  Eligibility eligible = EligibleSpeakers(corpus, config);
  const auto &speakers = eligible.included;

  // Pass 1: independent per-speaker draws.
  std::vector<SpeakerDraw> draws(speakers.size());
  ParallelFor(speakers.size(), threads, [&](std::size_t i) {
    const std::string &sid = speakers[i];
    SpeakerDraw &d = draws[i];
    d.rng.seed(DeriveSeed(config.seed, sid));

    std::vector<TrialPair> candidates = EnumerateSameSpeakerPairs(corpus, sid);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t j = k + UniformIndex(d.rng, candidates.size() - k);
      std::swap(candidates[k], candidates[j]);
    }
    candidates.resize(n);
    d.same = std::move(candidates);

    d.own = corpus.UtteranceIndicesOf(sid);
    d.pool = corpus.GroupPool(*corpus.GroupOf(sid), sid);
    DrawDifferentPairs(corpus, n, d, nullptr);
  });

  // Pass 2: in speaker order, drop pairs claimed by an earlier block and
  // top up from the speaker's own stream.
  TrialList list;
  list.config = config;
  list.excluded_speakers = eligible.excluded;
  PairSet taken;
  const auto &utts = corpus.utterances();
  for (std::size_t i = 0; i < speakers.size(); ++i) {
    SpeakerDraw &d = draws[i];
    std::erase_if(d.diff, [&](const PairKey &p) {
      return taken.count(MakeKey(p.first, p.second)) > 0;
    });
    DrawDifferentPairs(corpus, n, d, &taken);
    if (d.diff.size() < n) {
      list.excluded_speakers.push_back({speakers[i], ExclusionReason::kPairExhaustion});
      continue;
    }
    list.included_speakers.push_back(speakers[i]);
    for (TrialPair &p : d.same) list.pairs.push_back(std::move(p));
    for (const PairKey &p : d.diff) {
      taken.insert(MakeKey(p.first, p.second));
      list.pairs.push_back({utts[p.first].id, utts[p.second].id,
                            PairKind::kDifferentSpeaker,
                            GenerationConfig::kDifferentPairGrade});
    }
  }
  std::sort(list.excluded_speakers.begin(), list.excluded_speakers.end(),
            [](const Exclusion &a, const Exclusion &b) {
              return a.speaker_id < b.speaker_id;
            });
  if (list.included_speakers.empty())
    throw Error(ErrorKind::kNoEligibleSpeakers,
                "no speaker can supply " + std::to_string(n) +
                    " same-speaker and different-speaker pairs");
  return list;
}

std::vector<TrialList> GenerateVariants(const Corpus &corpus,
                                        const GenerationConfig &config,
                                        std::span<const uint64_t> seeds,
                                        unsigned threads) {
  if (seeds.empty())
    throw Error(ErrorKind::kInvalidArgument, "variants need at least one seed");
  std::set<uint64_t> distinct(seeds.begin(), seeds.end());
  if (distinct.size() != seeds.size())
    throw Error(ErrorKind::kInvalidArgument, "variant seeds must be distinct");
  std::vector<TrialList> lists;
  lists.reserve(seeds.size());
  for (uint64_t seed : seeds) {
    GenerationConfig c = config;
    c.seed = seed;
    lists.push_back(Generate(corpus, c, threads));
  }
  return lists;
}

}  // namespace fairtrial
