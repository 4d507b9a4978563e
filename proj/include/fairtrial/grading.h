// include/fairtrial/grading.h

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

#ifndef FAIRTRIAL_GRADING_H_
#define FAIRTRIAL_GRADING_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "fairtrial/corpus.h"

namespace fairtrial {

enum class PairKind { kSameSpeaker, kDifferentSpeaker };

/// Difficulty categories, ordered trivial < easy < medium < hard.
enum class Grade { kTrivial = 1, kEasy = 2, kMedium = 3, kHard = 4 };

std::string_view ToString(PairKind kind);
std::string_view ToString(Grade grade);  // "cat1_trivial" ... "cat4_hard"
std::optional<PairKind> ParsePairKind(std::string_view text);
std::optional<Grade> ParseGrade(std::string_view text);

struct PairGrade {
  PairKind kind;
  Grade grade;
  bool operator==(const PairGrade &) const = default;
};

/// The grading table on raw attribute comparisons.
///
///   same speaker, same recording                     -> trivial
///   same speaker, different recording                -> medium
///   different speakers, gender differs, nat. differs -> trivial
///   different speakers, gender differs, nat. same    -> easy
///   different speakers, gender same, nat. differs    -> medium
///   different speakers, gender same, nat. same       -> hard
///
/// Noise is not an input: utterances from one recording share noise
/// conditions, and otherwise it is unknown. Throws kInvalidPair for a same
/// speaker whose gender or nationality differs, and for different speakers
/// sharing a recording (no table row covers either).
PairGrade GradeAttributes(bool same_speaker, bool same_gender,
                          bool same_nationality, bool same_recording);

/// Grades two utterances of `corpus` by rel_path. Symmetric in its
/// arguments. Throws kDegeneratePair for identical ids, kUnresolved for
/// unknown paths, kUngradeable if either speaker lacks gender or
/// nationality, and kInvalidPair as in GradeAttributes.
PairGrade GradePair(const Corpus &corpus, std::string_view utt_a,
                    std::string_view utt_b);

using GradeCounts = std::map<std::pair<PairKind, Grade>, std::size_t>;

struct GradeHistogram {
  GradeCounts total;
  /// Keyed by the enroll-side speaker.
  std::map<std::string, GradeCounts> per_speaker;

  std::size_t size() const;
};

}  // namespace fairtrial

#endif  // FAIRTRIAL_GRADING_H_
