// include/fairtrial/guidelines.h

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

#ifndef FAIRTRIAL_GUIDELINES_H_
#define FAIRTRIAL_GUIDELINES_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairtrial/corpus.h"
#include "fairtrial/grading.h"
#include "fairtrial/trialgen.h"
#include "fairtrial/trials.h"

namespace fairtrial {

inline constexpr std::size_t kMinDifferentPairsPerSpeaker = kDefaultPairsPerSpeaker;

enum class CheckStatus { kPass, kFail, kManual };

std::string_view ToString(CheckStatus status);

struct GuidelineCheck {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  std::optional<std::string> first_offender;  // speaker id
};

struct GuidelineReport {
  std::vector<GuidelineCheck> checks;  // ids 1..5
  GradeHistogram profile;

  /// True when every machine-checkable item passes.
  bool passed() const;
  const GuidelineCheck *first_failure() const;
};

/// Checks a trial list against the dataset design checklist, per
/// enroll-side speaker:
///   1. same-speaker count equals different-speaker count
///   2. at least `min_diff_pairs` different-speaker pairs
///   3. equal trial totals across speakers
///   4. equal grade proportions across speakers
///   5. grade profile, left for a human to judge against the deployment
/// Pairs are regraded from the corpus; unresolvable pairs throw.
GuidelineReport ValidateGuidelines(const Corpus &corpus,
                                   std::span<const TrialPair> trials,
                                   std::size_t min_diff_pairs = kMinDifferentPairsPerSpeaker);

}  // namespace fairtrial

#endif  // FAIRTRIAL_GUIDELINES_H_
