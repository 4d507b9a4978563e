// include/fairtrial/metrics.h

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

#ifndef FAIRTRIAL_METRICS_H_
#define FAIRTRIAL_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairtrial/corpus.h"
#include "fairtrial/scoring.h"
#include "fairtrial/trials.h"

namespace fairtrial {

/// Detection cost weights. Defaults follow the VoxCeleb challenge.
struct DcfParams {
  double c_miss = 1.0;
  double c_fa = 1.0;
  double p_target = 0.05;

  void Validate() const;

  /// Cost of the better trivial system (accept all or reject all); the
  /// normalizer for minDCF.
  double TrivialCost() const;
};

/// One operating point. A trial is accepted iff its score >= threshold.
struct DetPoint {
  double threshold;
  double fpr;
  double fnr;
};

/// Operating points in ascending threshold order: one per distinct score,
/// plus a reject-all point just above the largest score. fpr is
/// non-increasing and fnr non-decreasing along the curve.
struct DetCurve {
  std::vector<DetPoint> points;
  std::size_t n_target = 0;
  std::size_t n_nontarget = 0;
};

/// Throws kInvalidArgument naming the empty side, or on a non-finite score.
DetCurve Sweep(std::span<const double> targets, std::span<const double> nontargets);

struct EerResult {
  double eer;
  double threshold;  // first operating point at or past the crossing
};

/// Where fnr meets fpr. If no operating point has fnr == fpr exactly, the
/// segment between the last point with fnr < fpr and the next one is
/// interpolated linearly.
EerResult Eer(const DetCurve &det);

struct DcfResult {
  double min_dcf;      // normalized unless disabled
  double min_dcf_raw;  // c_miss p fnr + c_fa (1 - p) fpr at the minimum
  double threshold;    // smallest threshold attaining the minimum
};

DcfResult MinDcf(const DetCurve &det, const DcfParams &params, bool normalize = true);

struct FnrAtFpr {
  double fnr;
  bool extrapolated;  // level below every achievable fpr
};

/// FNR at a target false-positive rate in (0, 1). Uses the lowest fnr
/// reached at each distinct fpr and interpolates linearly between the two
/// fprs bracketing the level.
FnrAtFpr FnrAtFprLevel(const DetCurve &det, double fpr_level);

struct MetricsResult {
  double eer = 0.0;
  double eer_threshold = 0.0;
  double min_dcf = 0.0;
  double min_dcf_raw = 0.0;
  double min_dcf_threshold = 0.0;
  DetCurve det;
  std::size_t n_target = 0;
  std::size_t n_nontarget = 0;
};

MetricsResult ComputeMetrics(std::span<const double> targets,
                             std::span<const double> nontargets,
                             const DcfParams &params, bool normalize = true);

inline constexpr const char *kOverallGroup = "overall";

/// Per-group outcome: a result, or why the group could not be scored
/// (e.g. it has no same-speaker trials).
struct GroupOutcome {
  std::optional<MetricsResult> result;
  std::string error;
};

/// Results keyed by group ("<gender>:<nationality>") plus kOverallGroup.
/// Pairs count toward the group of their enroll-side speaker.
using Evaluation = std::map<std::string, GroupOutcome>;

/// Throws kMissingScore listing up to 10 unscored pairs, and kUngradeable
/// if an enroll speaker has no group.
Evaluation Evaluate(const Corpus &corpus, std::span<const TrialPair> trials,
                    const ScoreProvider &scores, const DcfParams &params,
                    bool normalize = true);

}  // namespace fairtrial

#endif  // FAIRTRIAL_METRICS_H_
