// src/grading.cc

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

#include "fairtrial/grading.h"

#include "fairtrial/error.h"

namespace fairtrial {

std::string_view ToString(PairKind kind) {
  return kind == PairKind::kSameSpeaker ? "same_speaker" : "different_speaker";
}

std::string_view ToString(Grade grade) {
  switch (grade) {
    case Grade::kTrivial: return "cat1_trivial";
    case Grade::kEasy: return "cat2_easy";
    case Grade::kMedium: return "cat3_medium";
    case Grade::kHard: return "cat4_hard";
  }
  return "unknown";
}

std::optional<PairKind> ParsePairKind(std::string_view text) {
  if (text == "same_speaker") return PairKind::kSameSpeaker;
  if (text == "different_speaker") return PairKind::kDifferentSpeaker;
  return std::nullopt;
}

std::optional<Grade> ParseGrade(std::string_view text) {
  for (Grade g : {Grade::kTrivial, Grade::kEasy, Grade::kMedium, Grade::kHard})
    if (ToString(g) == text) return g;
  return std::nullopt;
}

PairGrade GradeAttributes(bool same_speaker, bool same_gender,
                          bool same_nationality, bool same_recording) {
  if (same_speaker) {
    if (!same_gender || !same_nationality)
      throw Error(ErrorKind::kInvalidPair,
                  "same-speaker pair with differing gender or nationality");
    return {PairKind::kSameSpeaker, same_recording ? Grade::kTrivial : Grade::kMedium};
  }
  if (same_recording)
    throw Error(ErrorKind::kInvalidPair,
                "different-speaker pair drawn from a single recording");
  Grade grade;
  if (same_gender)
    grade = same_nationality ? Grade::kHard : Grade::kMedium;
  else
    grade = same_nationality ? Grade::kEasy : Grade::kTrivial;
  return {PairKind::kDifferentSpeaker, grade};
}

PairGrade GradePair(const Corpus &corpus, std::string_view utt_a,
                    std::string_view utt_b) {
  if (utt_a == utt_b)
    throw Error(ErrorKind::kDegeneratePair,
                "pair compares utterance " + std::string(utt_a) + " with itself");
  const Utterance &a = corpus.GetUtterance(utt_a);
  const Utterance &b = corpus.GetUtterance(utt_b);
  const Speaker &sa = corpus.GetSpeaker(a.speaker_id);
  const Speaker &sb = corpus.GetSpeaker(b.speaker_id);
  for (const Speaker *s : {&sa, &sb})
    if (!s->gradeable())
      throw Error(ErrorKind::kUngradeable,
                  "speaker " + s->id + " has unknown gender or nationality");
  try {
    return GradeAttributes(sa.id == sb.id, sa.gender == sb.gender,
                           sa.nationality == sb.nationality,
                           a.recording_id == b.recording_id);
  } catch (const Error &e) {
    throw Error(e.kind(), std::string(e.what()) + ": " + a.id + " " + b.id);
  }
}

std::size_t GradeHistogram::size() const {
  std::size_t n = 0;
  for (const auto &[key, count] : total) n += count;
  return n;
}

}  // namespace fairtrial
