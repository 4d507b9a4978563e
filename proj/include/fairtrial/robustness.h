// include/fairtrial/robustness.h

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

#ifndef FAIRTRIAL_ROBUSTNESS_H_
#define FAIRTRIAL_ROBUSTNESS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairtrial/corpus.h"
#include "fairtrial/metrics.h"
#include "fairtrial/scoring.h"

namespace fairtrial {

/// The n values and seeds to cross. `groups` restricts which group results
/// are kept (empty keeps every group and the overall pool).
struct ExperimentGrid {
  std::vector<std::size_t> n_values;
  std::vector<uint64_t> seeds;
  std::vector<std::string> groups;
  DcfParams dcf;
  bool normalize = true;

  void Validate() const;
};

struct CellKey {
  std::string group;
  std::size_t n = 0;
  uint64_t seed = 0;
  auto operator<=>(const CellKey &) const = default;
  bool operator==(const CellKey &) const = default;
};

inline constexpr const char *kAllGroups = "*";

struct FailedCell {
  CellKey key;  // group is kAllGroups when generation itself failed
  std::string reason;
};

struct GridResults {
  std::map<CellKey, MetricsResult> cells;
  std::vector<FailedCell> failed;  // sorted by key
  /// Included speakers per (group, n), from the lowest seed that generated.
  std::map<std::pair<std::string, std::size_t>, std::size_t> included_speakers;
};

/// Generates, scores and evaluates every (n, seed) cell. Cells are
/// independent and may run concurrently; a failing cell is recorded and the
/// grid continues.
GridResults RunGrid(const Corpus &corpus, const ExperimentGrid &grid,
                    const ScoreProvider &scores, unsigned threads = 0);

enum class Metric { kEer, kMinDcf, kMinDcfRaw };

std::string_view ToString(Metric metric);
double MetricValue(const MetricsResult &result, Metric metric);

struct SpreadStats {
  std::string group;
  std::size_t n = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  /// (max - min) / min; absent when min is 0.
  std::optional<double> relative_spread;
  std::vector<double> samples;  // one per seed, ascending seed order
};

/// Summary of one set of per-seed values.
SpreadStats SummarizeSamples(std::span<const double> samples);

/// One SpreadStats per (group, n) present in `results`.
std::vector<SpreadStats> Spread(const GridResults &results, Metric metric);

struct BandPoint {
  double fpr;
  double fnr_min;
  double fnr_max;
  double width() const { return fnr_max - fnr_min; }
};

/// `count` log-spaced fpr levels from `lo` to `hi` inclusive.
std::vector<double> LogSpacedLevels(double lo = 1e-3, double hi = 0.5, std::size_t count = 30);

/// Min/max fnr across seed variants of one (group, n) cell at each fpr
/// level. Throws kInvalidArgument with fewer than two seeds.
std::vector<BandPoint> DetBand(const GridResults &results, std::string_view group,
                               std::size_t n,
                               std::span<const double> fpr_levels = {});

}  // namespace fairtrial

#endif  // FAIRTRIAL_ROBUSTNESS_H_
