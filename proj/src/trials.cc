// src/trials.cc

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

#include "fairtrial/trials.h"

#include <fstream>
#include <istream>

#include "fairtrial/error.h"
#include "fairtrial/text_io.h"

namespace fairtrial {

std::vector<RawTrial> ParseTrials(std::istream &in) {
  std::vector<RawTrial> trials;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 3)
      throw Error(ErrorKind::kFormat, "trial line " + std::to_string(line_no) +
                                          ": expected '<label> <enroll> <test>'");
    RawTrial t;
    if (fields[0] == "1")
      t.target = true;
    else if (fields[0] == "0")
      t.target = false;
    else
      throw Error(ErrorKind::kFormat, "trial line " + std::to_string(line_no) +
                                          ": label must be 0 or 1");
    t.enroll = std::string(fields[1]);
    t.test = std::string(fields[2]);
    trials.push_back(std::move(t));
  }
  return trials;
}

std::vector<RawTrial> ReadTrialFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return ParseTrials(in);
}

std::string FormatTrials(std::span<const TrialPair> pairs) {
  std::string out;
  for (const TrialPair &p : pairs) {
    out += p.target() ? '1' : '0';
    out += ' ';
    out += p.enroll;
    out += ' ';
    out += p.test;
    out += '\n';
  }
  return out;
}

std::vector<TrialPair> ResolveTrials(const Corpus &corpus,
                                     std::span<const RawTrial> raw) {
  std::vector<TrialPair> pairs;
  pairs.reserve(raw.size());
  for (const RawTrial &t : raw) {
    PairGrade g = GradePair(corpus, t.enroll, t.test);
    if ((g.kind == PairKind::kSameSpeaker) != t.target)
      throw Error(ErrorKind::kInvalidPair,
                  "trial label " + std::string(t.target ? "1" : "0") +
                      " contradicts speakers of " + t.enroll + " " + t.test);
    pairs.push_back({t.enroll, t.test, g.kind, g.grade});
  }
  return pairs;
}

GradeHistogram GradeTrialList(const Corpus &corpus,
                              std::span<const TrialPair> pairs) {
  GradeHistogram h;
  for (const TrialPair &p : pairs) {
    PairGrade g = GradePair(corpus, p.enroll, p.test);
    const std::string &speaker = corpus.GetUtterance(p.enroll).speaker_id;
    ++h.total[{g.kind, g.grade}];
    ++h.per_speaker[speaker][{g.kind, g.grade}];
  }
  return h;
}

std::string HistogramTable(const GradeHistogram &histogram) {
  std::string out = "kind\tcategory\tcount\n";
  for (const auto &[key, count] : histogram.total) {
    out += ToString(key.first);
    out += '\t';
    out += ToString(key.second);
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

}  // namespace fairtrial
