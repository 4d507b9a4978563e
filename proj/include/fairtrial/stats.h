// include/fairtrial/stats.h

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

#ifndef FAIRTRIAL_STATS_H_
#define FAIRTRIAL_STATS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairtrial/corpus.h"
#include "fairtrial/trials.h"

namespace fairtrial {

/// Same-speaker pair statistics for one nationality.
struct NationalityStats {
  std::string nationality;
  std::size_t speakers = 0;
  std::size_t pairs = 0;
  std::size_t trivial_pairs = 0;  // within-recording

  double pairs_per_speaker() const {
    return speakers == 0 ? 0.0 : static_cast<double>(pairs) / speakers;
  }
  double trivial_percent() const {
    return pairs == 0 ? 0.0 : 100.0 * static_cast<double>(trivial_pairs) / pairs;
  }
};

/// Per-nationality same-speaker statistics, ordered by pair count
/// (descending) then name. With a trial list, counts its same-speaker pairs
/// and the speakers enrolled in them; without one, counts every unordered
/// same-speaker pair the corpus can form. Throws kUnresolved naming the
/// first trial path missing from the corpus.
std::vector<NationalityStats> CorpusStats(
    const Corpus &corpus,
    std::optional<std::span<const RawTrial>> trials = std::nullopt);

/// Tab-separated: nationality, speakers, pairs, pairs_per_speaker (1 dp),
/// trivial_percent (1 dp).
std::string StatsTable(std::span<const NationalityStats> rows);

}  // namespace fairtrial

#endif  // FAIRTRIAL_STATS_H_
