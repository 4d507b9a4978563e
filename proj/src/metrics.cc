// src/metrics.cc

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

#include "fairtrial/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fairtrial/error.h"

namespace fairtrial {

void DcfParams::Validate() const {
  if (!(c_miss > 0.0) || !(c_fa > 0.0) || !std::isfinite(c_miss) || !std::isfinite(c_fa))
    throw Error(ErrorKind::kInvalidArgument, "DCF costs must be positive and finite");
  if (!(p_target > 0.0 && p_target < 1.0))
    throw Error(ErrorKind::kInvalidArgument, "p_target must lie strictly inside (0, 1)");
}

double DcfParams::TrivialCost() const {
  return std::min(c_miss * p_target, c_fa * (1.0 - p_target));
}

DetCurve Sweep(std::span<const double> targets, std::span<const double> nontargets) {
  if (targets.empty())
    throw Error(ErrorKind::kInvalidArgument, "sweep: no target scores");
  if (nontargets.empty())
    throw Error(ErrorKind::kInvalidArgument, "sweep: no nontarget scores");
  std::vector<double> tar(targets.begin(), targets.end());
  std::vector<double> non(nontargets.begin(), nontargets.end());
  for (double s : tar)
    if (!std::isfinite(s)) throw Error(ErrorKind::kInvalidArgument, "sweep: non-finite score");
  for (double s : non)
    if (!std::isfinite(s)) throw Error(ErrorKind::kInvalidArgument, "sweep: non-finite score");
  std::sort(tar.begin(), tar.end());
  std::sort(non.begin(), non.end());

  std::vector<double> thresholds;
  thresholds.reserve(tar.size() + non.size() + 1);
  std::merge(tar.begin(), tar.end(), non.begin(), non.end(), std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  thresholds.push_back(
      std::nextafter(thresholds.back(), std::numeric_limits<double>::infinity()));

  DetCurve det;
  det.n_target = tar.size();
  det.n_nontarget = non.size();
  det.points.reserve(thresholds.size());
  const double nt = static_cast<double>(tar.size());
  const double nn = static_cast<double>(non.size());
  std::size_t below_t = 0, below_n = 0;  // scores strictly below threshold
  for (double theta : thresholds) {
    while (below_t < tar.size() && tar[below_t] < theta) ++below_t;
    while (below_n < non.size() && non[below_n] < theta) ++below_n;
    det.points.push_back({theta, static_cast<double>(non.size() - below_n) / nn,
                          static_cast<double>(below_t) / nt});
  }
  return det;
}

namespace {

void CheckCurve(const DetCurve &det) {
  if (det.points.empty())
    throw Error(ErrorKind::kInvalidArgument, "empty DET curve");
}

}  // namespace

EerResult Eer(const DetCurve &det) {
  CheckCurve(det);
  const auto &p = det.points;
  for (std::size_t k = 0; k < p.size(); ++k) {
    double d = p[k].fnr - p[k].fpr;
    if (d < 0.0) continue;
    if (d == 0.0) return {p[k].fnr, p[k].threshold};
    // Sweep curves start at accept-all (fnr 0, fpr 1), so this is only
    // reachable for hand-built curves.
    if (k == 0) return {0.5 * (p[k].fnr + p[k].fpr), p[k].threshold};
    // Crossing inside the segment (k-1, k).
    double d_prev = p[k - 1].fnr - p[k - 1].fpr;
    double t = -d_prev / (d - d_prev);
    double eer = p[k - 1].fnr + t * (p[k].fnr - p[k - 1].fnr);
    return {eer, p[k].threshold};
  }
  // fnr < fpr everywhere; only possible for a truncated curve.
  const DetPoint &last = p.back();
  return {0.5 * (last.fnr + last.fpr), last.threshold};
}

DcfResult MinDcf(const DetCurve &det, const DcfParams &params, bool normalize) {
  CheckCurve(det);
  params.Validate();
  const double w_miss = params.c_miss * params.p_target;
  const double w_fa = params.c_fa * (1.0 - params.p_target);
  double best = std::numeric_limits<double>::infinity();
  double best_threshold = det.points.front().threshold;
  for (const DetPoint &pt : det.points) {
    double dcf = w_miss * pt.fnr + w_fa * pt.fpr;
    if (dcf < best) {
      best = dcf;
      best_threshold = pt.threshold;
    }
  }
  double reported = normalize ? best / params.TrivialCost() : best;
  return {reported, best, best_threshold};
}

FnrAtFpr FnrAtFprLevel(const DetCurve &det, double fpr_level) {
  CheckCurve(det);
  if (!(fpr_level > 0.0 && fpr_level < 1.0))
    throw Error(ErrorKind::kInvalidArgument, "fpr level must lie strictly inside (0, 1)");
  // Lowest fnr at each distinct fpr, ascending in fpr.
  std::vector<std::pair<double, double>> envelope;
  for (auto it = det.points.rbegin(); it != det.points.rend(); ++it) {
    if (!envelope.empty() && envelope.back().first == it->fpr) {
      envelope.back().second = std::min(envelope.back().second, it->fnr);
    } else {
      envelope.emplace_back(it->fpr, it->fnr);
    }
  }
  std::sort(envelope.begin(), envelope.end());

  auto above = std::lower_bound(envelope.begin(), envelope.end(),
                                std::make_pair(fpr_level, -1.0));
  if (above != envelope.end() && above->first == fpr_level) return {above->second, false};
  if (above == envelope.begin()) return {above->second, true};
  auto below = std::prev(above);
  if (above == envelope.end()) return {below->second, false};
  double t = (fpr_level - below->first) / (above->first - below->first);
  return {below->second + t * (above->second - below->second), false};
}

MetricsResult ComputeMetrics(std::span<const double> targets,
                             std::span<const double> nontargets,
                             const DcfParams &params, bool normalize) {
  MetricsResult r;
  r.det = Sweep(targets, nontargets);
  EerResult e = Eer(r.det);
  DcfResult d = MinDcf(r.det, params, normalize);
  r.eer = e.eer;
  r.eer_threshold = e.threshold;
  r.min_dcf = d.min_dcf;
  r.min_dcf_raw = d.min_dcf_raw;
  r.min_dcf_threshold = d.threshold;
  r.n_target = r.det.n_target;
  r.n_nontarget = r.det.n_nontarget;
  return r;
}

Evaluation Evaluate(const Corpus &corpus, std::span<const TrialPair> trials,
                    const ScoreProvider &scores, const DcfParams &params,
                    bool normalize) {
  params.Validate();
  struct Split {
    std::vector<double> targets;
    std::vector<double> nontargets;
  };
  std::map<std::string, Split> groups;
  Split overall;
  std::vector<std::string> missing;
  std::size_t missing_count = 0;
  for (const TrialPair &t : trials) {
    std::optional<double> s = scores.Score(t.enroll, t.test);
    if (!s) {
      if (missing.size() < 10) missing.push_back(t.enroll + " " + t.test);
      ++missing_count;
      continue;
    }
    const std::string &speaker = corpus.GetUtterance(t.enroll).speaker_id;
    std::optional<GroupKey> group = corpus.GroupOf(speaker);
    if (!group)
      throw Error(ErrorKind::kUngradeable,
                  "enroll speaker " + speaker + " has no group");
    Split &g = groups[group->ToString()];
    (t.target() ? g.targets : g.nontargets).push_back(*s);
    (t.target() ? overall.targets : overall.nontargets).push_back(*s);
  }
  if (missing_count > 0) {
    std::string msg = std::to_string(missing_count) + " trial(s) without a score:";
    for (const std::string &m : missing) msg += "\n  " + m;
    throw Error(ErrorKind::kMissingScore, msg);
  }

  Evaluation eval;
  auto score_group = [&](const std::string &name, const Split &split) {
    GroupOutcome outcome;
    if (split.targets.empty())
      outcome.error = "group " + name + " has no same-speaker trials (n_target = 0)";
    else if (split.nontargets.empty())
      outcome.error = "group " + name + " has no different-speaker trials (n_nontarget = 0)";
    else
      outcome.result = ComputeMetrics(split.targets, split.nontargets, params, normalize);
    eval.emplace(name, std::move(outcome));
  };
  for (const auto &[name, split] : groups) score_group(name, split);
  score_group(kOverallGroup, overall);
  return eval;
}

}  // namespace fairtrial
