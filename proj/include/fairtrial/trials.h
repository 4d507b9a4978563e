// include/fairtrial/trials.h

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

#ifndef FAIRTRIAL_TRIALS_H_
#define FAIRTRIAL_TRIALS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fairtrial/corpus.h"
#include "fairtrial/grading.h"

namespace fairtrial {

/// One graded (enroll, test) comparison. Evaluation treats it as unordered.
struct TrialPair {
  std::string enroll;
  std::string test;
  PairKind kind = PairKind::kSameSpeaker;
  Grade grade = Grade::kMedium;

  bool target() const { return kind == PairKind::kSameSpeaker; }
  bool operator==(const TrialPair &) const = default;
};

/// A trial-file line before it is checked against a corpus.
struct RawTrial {
  bool target = false;
  std::string enroll;
  std::string test;
};

/// Trial files hold `<label> <enroll> <test>` per line, label 1 for same
/// speaker and 0 for different speakers. Any whitespace separates fields.
std::vector<RawTrial> ParseTrials(std::istream &in);
std::vector<RawTrial> ReadTrialFile(const std::string &path);

/// Emits the trial-file format with single spaces and '\n' line ends.
std::string FormatTrials(std::span<const TrialPair> pairs);

/// Grades every raw trial against `corpus`. Throws kInvalidPair when the
/// file's label disagrees with the speakers of the two utterances.
std::vector<TrialPair> ResolveTrials(const Corpus &corpus,
                                     std::span<const RawTrial> raw);

/// Regrades each pair from the corpus and counts (kind, grade) cells, in
/// total and per enroll-side speaker.
GradeHistogram GradeTrialList(const Corpus &corpus,
                              std::span<const TrialPair> pairs);

std::string HistogramTable(const GradeHistogram &histogram);

}  // namespace fairtrial

#endif  // FAIRTRIAL_TRIALS_H_
