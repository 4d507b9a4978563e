// src/robustness.cc

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

#include "fairtrial/robustness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <Eigen/Dense>

#include "fairtrial/error.h"
#include "fairtrial/parallel.h"
#include "fairtrial/trialgen.h"

namespace fairtrial {

void ExperimentGrid::Validate() const {
  if (n_values.empty() || seeds.empty())
    throw Error(ErrorKind::kInvalidArgument, "grid needs at least one n and one seed");
  for (std::size_t n : n_values)
    if (n == 0) throw Error(ErrorKind::kInvalidArgument, "grid n values must be positive");
  std::set<uint64_t> distinct(seeds.begin(), seeds.end());
  if (distinct.size() != seeds.size())
    throw Error(ErrorKind::kInvalidArgument, "grid seeds must be distinct");
  dcf.Validate();
}

namespace {

struct CellOutput {
  std::vector<std::pair<std::string, MetricsResult>> results;
  std::vector<FailedCell> failed;
  std::map<std::string, std::size_t> included;
  bool generated = false;
};

}  // namespace

GridResults RunGrid(const Corpus &corpus, const ExperimentGrid &grid,
                    const ScoreProvider &scores, unsigned threads) {
  grid.Validate();
  std::set<std::string, std::less<>> keep(grid.groups.begin(), grid.groups.end());
  auto kept = [&](const std::string &g) { return keep.empty() || keep.count(g) > 0; };

  std::vector<std::pair<std::size_t, uint64_t>> cells;
  for (std::size_t n : grid.n_values)
    for (uint64_t seed : grid.seeds) cells.emplace_back(n, seed);

  std::vector<CellOutput> outputs(cells.size());
  ParallelFor(cells.size(), threads, [&](std::size_t i) {
    auto [n, seed] = cells[i];
    CellOutput &out = outputs[i];
    GenerationConfig config;
    config.n = n;
    config.seed = seed;
    Evaluation eval;
    try {
      TrialList list = Generate(corpus, config, 1);
      out.generated = true;
      for (const std::string &sid : list.included_speakers)
        ++out.included[corpus.GroupOf(sid)->ToString()];
      out.included[kOverallGroup] = list.included_speakers.size();
      eval = Evaluate(corpus, list.pairs, scores, grid.dcf, grid.normalize);
    } catch (const Error &e) {
      out.failed.push_back({{kAllGroups, n, seed},
                            std::string(ToString(e.kind())) + ": " + e.what()});
      return;
    }
    for (auto &[group, outcome] : eval) {
      if (!kept(group)) continue;
      if (outcome.result)
        out.results.emplace_back(group, std::move(*outcome.result));
      else
        out.failed.push_back({{group, n, seed}, outcome.error});
    }
  });

  GridResults results;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [n, seed] = cells[i];
    CellOutput &out = outputs[i];
    for (auto &[group, r] : out.results) results.cells.emplace(CellKey{group, n, seed}, std::move(r));
    for (FailedCell &f : out.failed) results.failed.push_back(std::move(f));
  }
  // Speaker counts from the lowest generating seed for each n.
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
  for (std::size_t i : order) {
    if (!outputs[i].generated) continue;
    for (const auto &[group, count] : outputs[i].included)
      if (kept(group)) results.included_speakers.emplace(std::make_pair(group, cells[i].first), count);
  }
  std::sort(results.failed.begin(), results.failed.end(),
            [](const FailedCell &a, const FailedCell &b) { return a.key < b.key; });
  return results;
}

std::string_view ToString(Metric metric) {
  switch (metric) {
    case Metric::kEer: return "eer";
    case Metric::kMinDcf: return "min_dcf";
    case Metric::kMinDcfRaw: return "min_dcf_raw";
  }
  return "unknown";
}

double MetricValue(const MetricsResult &result, Metric metric) {
  switch (metric) {
    case Metric::kEer: return result.eer;
    case Metric::kMinDcf: return result.min_dcf;
    case Metric::kMinDcfRaw: return result.min_dcf_raw;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

SpreadStats SummarizeSamples(std::span<const double> samples) {
  if (samples.empty())
    throw Error(ErrorKind::kInvalidArgument, "spread needs at least one sample");
  Eigen::Map<const Eigen::ArrayXd> v(samples.data(), static_cast<Eigen::Index>(samples.size()));
  SpreadStats s;
  s.min = v.minCoeff();
  s.max = v.maxCoeff();
  s.mean = std::clamp(v.mean(), s.min, s.max);
  if (s.min > 0.0) s.relative_spread = (s.max - s.min) / s.min;
  s.samples.assign(samples.begin(), samples.end());
  return s;
}

std::vector<SpreadStats> Spread(const GridResults &results, Metric metric) {
  std::map<std::pair<std::string, std::size_t>, std::vector<double>> by_cell;
  // cells is ordered by (group, n, seed), so samples arrive in seed order.
  for (const auto &[key, r] : results.cells)
    by_cell[{key.group, key.n}].push_back(MetricValue(r, metric));
  std::vector<SpreadStats> out;
  for (const auto &[cell, values] : by_cell) {
    SpreadStats s = SummarizeSamples(values);
    s.group = cell.first;
    s.n = cell.second;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<double> LogSpacedLevels(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi > lo && hi < 1.0) || count < 2)
    throw Error(ErrorKind::kInvalidArgument, "bad fpr level range");
  Eigen::ArrayXd exps = Eigen::ArrayXd::LinSpaced(static_cast<Eigen::Index>(count),
                                                  std::log10(lo), std::log10(hi));
  std::vector<double> levels(count);
  for (std::size_t i = 0; i < count; ++i)
    levels[i] = std::pow(10.0, exps[static_cast<Eigen::Index>(i)]);
  levels.front() = lo;
  levels.back() = hi;
  return levels;
}

std::vector<BandPoint> DetBand(const GridResults &results, std::string_view group,
                               std::size_t n, std::span<const double> fpr_levels) {
  std::vector<double> default_levels;
  if (fpr_levels.empty()) {
    default_levels = LogSpacedLevels();
    fpr_levels = default_levels;
  }
  std::vector<const DetCurve *> curves;
  for (const auto &[key, r] : results.cells)
    if (key.group == group && key.n == n) curves.push_back(&r.det);
  if (curves.size() < 2)
    throw Error(ErrorKind::kInvalidArgument,
                "DET band for " + std::string(group) + " n=" + std::to_string(n) +
                    " needs at least two seed variants");
  std::vector<BandPoint> band;
  band.reserve(fpr_levels.size());
  for (double level : fpr_levels) {
    BandPoint b{level, std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
    for (const DetCurve *c : curves) {
      double fnr = FnrAtFprLevel(*c, level).fnr;
      b.fnr_min = std::min(b.fnr_min, fnr);
      b.fnr_max = std::max(b.fnr_max, fnr);
    }
    band.push_back(b);
  }
  return band;
}

}  // namespace fairtrial
