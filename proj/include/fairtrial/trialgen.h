// include/fairtrial/trialgen.h

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

#ifndef FAIRTRIAL_TRIALGEN_H_
#define FAIRTRIAL_TRIALGEN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairtrial/corpus.h"
#include "fairtrial/grading.h"
#include "fairtrial/trials.h"

namespace fairtrial {

/// Minimum different-speaker pairs per speaker recommended for a robust
/// evaluation; also the default n.
inline constexpr std::size_t kDefaultPairsPerSpeaker = 500;

/// Draw budget per speaker for distinct different-speaker pairs, as a
/// multiple of n.
inline constexpr std::size_t kDrawBudgetFactor = 100;

enum class GroupPolicy { kSameGenderAndNationality };

std::string_view ToString(GroupPolicy policy);

struct GenerationConfig {
  std::size_t n = kDefaultPairsPerSpeaker;  // same pairs = different pairs = n
  uint64_t seed = 0;
  GroupPolicy group_policy = GroupPolicy::kSameGenderAndNationality;

  static constexpr Grade kSamePairGrade = Grade::kMedium;
  static constexpr Grade kDifferentPairGrade = Grade::kHard;
};

enum class ExclusionReason {
  kUngradeable,
  kInsufficientSamePairs,
  kNoGroupPartners,
  kInsufficientDifferentPairs,
  kPairExhaustion,
};

std::string_view ToString(ExclusionReason reason);

struct Exclusion {
  std::string speaker_id;
  ExclusionReason reason;
  bool operator==(const Exclusion &) const = default;
};

struct Eligibility {
  std::vector<std::string> included;  // sorted
  std::vector<Exclusion> excluded;    // sorted by speaker
};

/// A generated evaluation dataset. Pairs are grouped by speaker in sorted
/// speaker order; each block holds n same-speaker pairs followed by n
/// different-speaker pairs, the block's speaker always on the enroll side.
struct TrialList {
  std::vector<TrialPair> pairs;
  GenerationConfig config;
  std::vector<std::string> included_speakers;
  std::vector<Exclusion> excluded_speakers;
};

/// All cross-recording pairs of one speaker's utterances, each oriented
/// (smaller rel_path, larger rel_path) and sorted.
std::vector<TrialPair> EnumerateSameSpeakerPairs(const Corpus &corpus,
                                                 std::string_view speaker_id);

/// Number of cross-recording same-speaker pairs, without enumerating them.
std::size_t CountSameSpeakerPairs(const Corpus &corpus, std::string_view speaker_id);

/// Number of distinct (own utterance, partner utterance) combinations against
/// the rest of the speaker's group, excluding shared recordings.
std::size_t CountDifferentSpeakerCandidates(const Corpus &corpus,
                                            std::string_view speaker_id);

/// A speaker is included iff it has at least n cross-recording same pairs
/// and strictly more than n candidate different pairs. Seed-independent.
Eligibility EligibleSpeakers(const Corpus &corpus, const GenerationConfig &config);

/// Builds the dataset. For each eligible speaker, n same pairs are sampled
/// without replacement and n distinct different pairs are drawn (enroll
/// with replacement from the speaker, test from the pooled utterances of
/// its group partners), all from a stream seeded by (config.seed,
/// speaker_id). Different pairs are also distinct across speaker blocks;
/// a later block redraws from its own stream on a clash. A speaker whose
/// draws exceed kDrawBudgetFactor * n is excluded with kPairExhaustion.
///
/// Output is a pure function of (corpus, config); `threads` only changes
/// speed. Throws kNoEligibleSpeakers if no speaker survives and
/// kInvalidArgument for n == 0.
TrialList Generate(const Corpus &corpus, const GenerationConfig &config,
                   unsigned threads = 0);

/// One Generate() per seed. Seeds must be non-empty and distinct.
std::vector<TrialList> GenerateVariants(const Corpus &corpus,
                                        const GenerationConfig &config,
                                        std::span<const uint64_t> seeds,
                                        unsigned threads = 0);

}  // namespace fairtrial

#endif  // FAIRTRIAL_TRIALGEN_H_
