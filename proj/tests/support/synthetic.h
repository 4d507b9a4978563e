// tests/support/synthetic.h

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

#ifndef FAIRTRIAL_TESTS_SUPPORT_SYNTHETIC_H_
#define FAIRTRIAL_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "fairtrial/corpus.h"

namespace fairtrial::testing {

struct GroupSpec {
  std::string nationality;
  Gender gender;
  std::size_t speakers;
};

struct CorpusText {
  std::string metadata;
  std::string utterances;
};

// Speakers "<prefix><nationality>_<g><idx>", each with `recordings`
// recordings of `per_recording` utterances. Recording ids are globally
// unique.
inline CorpusText SyntheticCorpusText(const std::vector<GroupSpec> &groups,
                                      std::size_t recordings = 5,
                                      std::size_t per_recording = 4,
                                      const std::string &prefix = "") {
  std::ostringstream meta, utts;
  meta << "speaker_id,gender,nationality\n";
  for (const GroupSpec &g : groups) {
    for (std::size_t s = 0; s < g.speakers; ++s) {
      char sid[128];
      std::snprintf(sid, sizeof(sid), "%s%s_%c%03zu", prefix.c_str(), g.nationality.c_str(),
                    g.gender == Gender::kMale ? 'm' : 'f', s);
      meta << sid << ',' << (g.gender == Gender::kMale ? "m" : "f") << ',' << g.nationality
           << '\n';
      for (std::size_t r = 0; r < recordings; ++r)
        for (std::size_t u = 0; u < per_recording; ++u) {
          char path[256];
          std::snprintf(path, sizeof(path), "%s/%s_rec%02zu/%05zu.wav", sid, sid, r, u);
          utts << path << '\n';
        }
    }
  }
  return {meta.str(), utts.str()};
}

inline Corpus CorpusFromText(const std::string &metadata, const std::string &utterances,
                             BuildWarnings *warnings = nullptr) {
  std::istringstream meta(metadata), utts(utterances);
  return Corpus::Build(LoadMetadata(meta), LoadUtterances(utts), warnings);
}

inline Corpus SyntheticCorpus(const std::vector<GroupSpec> &groups, std::size_t recordings = 5,
                              std::size_t per_recording = 4, const std::string &prefix = "") {
  CorpusText t = SyntheticCorpusText(groups, recordings, per_recording, prefix);
  return CorpusFromText(t.metadata, t.utterances);
}

// 30 speakers in three groups of ten, 5 recordings x 4 utterances.
inline Corpus ThreeGroupCorpus() {
  return SyntheticCorpus({{"canada", Gender::kMale, 10},
                          {"india", Gender::kFemale, 10},
                          {"uk", Gender::kMale, 10}});
}

}  // namespace fairtrial::testing

#endif  // FAIRTRIAL_TESTS_SUPPORT_SYNTHETIC_H_
