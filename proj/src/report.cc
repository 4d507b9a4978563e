// src/report.cc

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

#include "fairtrial/report.h"

#include <cmath>

#include "fairtrial/text_io.h"

namespace fairtrial {

namespace {

Json CountsJson(const GradeCounts &counts) {
  Json arr = Json::array();
  for (const auto &[key, count] : counts)
    arr.push_back({{"kind", ToString(key.first)},
                   {"category", ToString(key.second)},
                   {"count", count}});
  return arr;
}

// JSON has no infinities; thresholds are finite by construction but keep
// the output valid regardless.
Json Number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

Json ToJson(const GradeHistogram &histogram) {
  Json per = Json::object();
  for (const auto &[sid, counts] : histogram.per_speaker) per[sid] = CountsJson(counts);
  return {{"total_pairs", histogram.size()},
          {"histogram", CountsJson(histogram.total)},
          {"per_speaker", per}};
}

Json GenerationManifest(const TrialList &list, const GradeHistogram &histogram) {
  Json excluded = Json::array();
  for (const Exclusion &e : list.excluded_speakers)
    excluded.push_back({{"speaker_id", e.speaker_id}, {"reason", ToString(e.reason)}});
  return {{"config",
           {{"n", list.config.n},
            {"seed", list.config.seed},
            {"group_policy", ToString(list.config.group_policy)},
            {"same_pair_grade", ToString(GenerationConfig::kSamePairGrade)},
            {"different_pair_grade", ToString(GenerationConfig::kDifferentPairGrade)}}},
          {"pairs", list.pairs.size()},
          {"included_speakers", list.included_speakers},
          {"excluded_speakers", excluded},
          {"grades", CountsJson(histogram.total)}};
}

Json EvaluationJson(const Evaluation &eval, const DcfParams &params, bool normalize,
                    std::span<const double> fpr_levels) {
  Json groups = Json::object();
  for (const auto &[name, outcome] : eval) {
    if (!outcome.result) {
      groups[name] = {{"error", outcome.error}};
      continue;
    }
    const MetricsResult &r = *outcome.result;
    Json at = Json::array();
    for (double level : fpr_levels) {
      FnrAtFpr f = FnrAtFprLevel(r.det, level);
      at.push_back({{"fpr", level}, {"fnr", f.fnr}, {"extrapolated", f.extrapolated}});
    }
    groups[name] = {{"n_target", r.n_target},
                    {"n_nontarget", r.n_nontarget},
                    {"eer", r.eer},
                    {"eer_threshold", Number(r.eer_threshold)},
                    {"min_dcf", r.min_dcf},
                    {"min_dcf_raw", r.min_dcf_raw},
                    {"min_dcf_threshold", Number(r.min_dcf_threshold)},
                    {"fnr_at_fpr", at}};
  }
  return {{"dcf",
           {{"c_miss", params.c_miss},
            {"c_fa", params.c_fa},
            {"p_target", params.p_target},
            {"normalized", normalize}}},
          {"decision_rule", "accept iff score >= threshold"},
          {"group_attribution", "enroll"},
          {"groups", groups}};
}

std::string DetPointsTable(const Evaluation &eval) {
  std::string out = "group\tthreshold\tfpr\tfnr\n";
  for (const auto &[name, outcome] : eval) {
    if (!outcome.result) continue;
    for (const DetPoint &p : outcome.result->det.points)
      out += name + '\t' + FormatFixed(p.threshold, 6) + '\t' + FormatFixed(p.fpr, 6) + '\t' +
             FormatFixed(p.fnr, 6) + '\n';
  }
  return out;
}

Json GridJson(const GridResults &results) {
  Json cells = Json::object();
  for (const auto &[key, r] : results.cells) {
    cells[key.group][std::to_string(key.n)][std::to_string(key.seed)] = {
        {"n_target", r.n_target},
        {"n_nontarget", r.n_nontarget},
        {"eer", r.eer},
        {"min_dcf", r.min_dcf},
        {"min_dcf_raw", r.min_dcf_raw}};
  }
  Json failed = Json::array();
  for (const FailedCell &f : results.failed)
    failed.push_back({{"group", f.key.group}, {"n", f.key.n}, {"seed", f.key.seed},
                      {"reason", f.reason}});
  Json speakers = Json::object();
  for (const auto &[cell, count] : results.included_speakers)
    speakers[cell.first][std::to_string(cell.second)] = count;
  return {{"results", cells}, {"failed", failed}, {"included_speakers", speakers}};
}

std::string GridTable(const GridResults &results) {
  std::string out = "group\tn\tseed\tn_target\tn_nontarget\teer\tmin_dcf\tmin_dcf_raw\n";
  for (const auto &[key, r] : results.cells)
    out += key.group + '\t' + std::to_string(key.n) + '\t' + std::to_string(key.seed) + '\t' +
           std::to_string(r.n_target) + '\t' + std::to_string(r.n_nontarget) + '\t' +
           FormatFixed(r.eer, 6) + '\t' + FormatFixed(r.min_dcf, 6) + '\t' +
           FormatFixed(r.min_dcf_raw, 6) + '\n';
  return out;
}

Json SpreadJson(std::span<const SpreadStats> spread, Metric metric) {
  Json arr = Json::array();
  for (const SpreadStats &s : spread) {
    arr.push_back({{"group", s.group},
                   {"n", s.n},
                   {"min", s.min},
                   {"max", s.max},
                   {"mean", s.mean},
                   {"relative_spread", s.relative_spread ? Json(*s.relative_spread) : Json()},
                   {"samples", s.samples}});
  }
  return {{"metric", ToString(metric)}, {"cells", arr}};
}

std::string SpreadTable(std::span<const SpreadStats> spread, Metric metric) {
  std::string out = "metric\tgroup\tn\tmin\tmax\tmean\trelative_spread\n";
  for (const SpreadStats &s : spread)
    out += std::string(ToString(metric)) + '\t' + s.group + '\t' + std::to_string(s.n) + '\t' +
           FormatFixed(s.min, 6) + '\t' + FormatFixed(s.max, 6) + '\t' +
           FormatFixed(s.mean, 6) + '\t' +
           (s.relative_spread ? FormatFixed(*s.relative_spread, 6) : std::string("undefined")) +
           '\n';
  return out;
}

Json ToJson(const GuidelineReport &report) {
  Json checks = Json::array();
  for (const GuidelineCheck &c : report.checks) {
    Json j = {{"id", c.id}, {"title", c.title}, {"status", ToString(c.status)},
              {"detail", c.detail}};
    if (c.first_offender) j["first_offender"] = *c.first_offender;
    checks.push_back(std::move(j));
  }
  return {{"passed", report.passed()}, {"checks", checks}, {"grade_profile", ToJson(report.profile)}};
}

Json ToJson(std::span<const NationalityStats> rows) {
  Json arr = Json::array();
  for (const NationalityStats &r : rows)
    arr.push_back({{"nationality", r.nationality},
                   {"speakers", r.speakers},
                   {"pairs", r.pairs},
                   {"pairs_per_speaker", r.pairs_per_speaker()},
                   {"trivial_percent", r.trivial_percent()}});
  return arr;
}

}  // namespace fairtrial
