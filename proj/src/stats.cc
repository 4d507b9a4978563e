// src/stats.cc

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

#include "fairtrial/stats.h"

#include <algorithm>
#include <map>
#include <set>

#include "fairtrial/text_io.h"

namespace fairtrial {

namespace {

std::string Label(const Speaker &s) {
  return s.nationality.empty() ? std::string("(none)") : s.nationality;
}

struct Accumulator {
  std::set<std::string> speakers;
  std::size_t pairs = 0;
  std::size_t trivial = 0;
};

}  // namespace

std::vector<NationalityStats> CorpusStats(
    const Corpus &corpus, std::optional<std::span<const RawTrial>> trials) {
  std::map<std::string, Accumulator> acc;
  if (trials) {
    for (const RawTrial &t : *trials) {
      const Utterance &a = corpus.GetUtterance(t.enroll);
      const Utterance &b = corpus.GetUtterance(t.test);
      if (a.speaker_id != b.speaker_id) continue;
      Accumulator &cell = acc[Label(corpus.GetSpeaker(a.speaker_id))];
      cell.speakers.insert(a.speaker_id);
      ++cell.pairs;
      if (a.recording_id == b.recording_id) ++cell.trivial;
    }
  } else {
    const auto &utts = corpus.utterances();
    for (const Speaker &s : corpus.speakers()) {
      Accumulator &cell = acc[Label(s)];
      cell.speakers.insert(s.id);
      const auto &own = corpus.UtteranceIndicesOf(s.id);
      for (std::size_t i = 0; i < own.size(); ++i)
        for (std::size_t j = i + 1; j < own.size(); ++j) {
          ++cell.pairs;
          if (utts[own[i]].recording_id == utts[own[j]].recording_id) ++cell.trivial;
        }
    }
  }

  std::vector<NationalityStats> rows;
  for (auto &[name, cell] : acc)
    rows.push_back({name, cell.speakers.size(), cell.pairs, cell.trivial});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const NationalityStats &a, const NationalityStats &b) {
                     return a.pairs > b.pairs;
                   });
  return rows;
}

std::string StatsTable(std::span<const NationalityStats> rows) {
  std::string out = "nationality\tspeakers\tpairs\tpairs_per_speaker\ttrivial_percent\n";
  for (const NationalityStats &r : rows) {
    out += r.nationality + '\t' + std::to_string(r.speakers) + '\t' +
           std::to_string(r.pairs) + '\t' + FormatFixed(r.pairs_per_speaker(), 1) +
           '\t' + FormatFixed(r.trivial_percent(), 1) + '\n';
  }
  return out;
}

}  // namespace fairtrial
