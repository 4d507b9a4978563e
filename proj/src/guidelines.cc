// src/guidelines.cc

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

#include "fairtrial/guidelines.h"

#include <map>
#include <numeric>

#include "fairtrial/text_io.h"

namespace fairtrial {

std::string_view ToString(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kManual: return "manual";
  }
  return "unknown";
}

bool GuidelineReport::passed() const { return first_failure() == nullptr; }

const GuidelineCheck *GuidelineReport::first_failure() const {
  for (const GuidelineCheck &c : checks)
    if (c.status == CheckStatus::kFail) return &c;
  return nullptr;
}

namespace {

std::size_t CountKind(const GradeCounts &counts, PairKind kind) {
  std::size_t n = 0;
  for (const auto &[key, c] : counts)
    if (key.first == kind) n += c;
  return n;
}

std::size_t Total(const GradeCounts &counts) {
  std::size_t n = 0;
  for (const auto &[key, c] : counts) n += c;
  return n;
}

// Grade mix with counts divided by their gcd; equal keys mean equal
// proportions.
GradeCounts Proportions(const GradeCounts &counts) {
  std::size_t g = 0;
  for (const auto &[key, c] : counts) g = std::gcd(g, c);
  GradeCounts out;
  for (const auto &[key, c] : counts)
    if (c > 0) out[key] = c / g;
  return out;
}

// Most frequent value; ties go to the smallest.
template <typename T>
T Mode(const std::map<std::string, T> &values) {
  std::map<T, std::size_t> freq;
  for (const auto &[sid, v] : values) ++freq[v];
  auto best = freq.begin();
  for (auto it = freq.begin(); it != freq.end(); ++it)
    if (it->second > best->second) best = it;
  return best->first;
}

std::string ProfileSummary(const GradeCounts &counts) {
  std::size_t total = Total(counts);
  std::string out;
  for (const auto &[key, c] : counts) {
    if (!out.empty()) out += ", ";
    out += std::string(ToString(key.first)) + "/" + std::string(ToString(key.second)) + "=" +
           std::to_string(c);
    if (total > 0) out += " (" + FormatFixed(100.0 * c / total, 1) + "%)";
  }
  return out.empty() ? "no trials" : out;
}

}  // namespace

GuidelineReport ValidateGuidelines(const Corpus &corpus, std::span<const TrialPair> trials,
                                   std::size_t min_diff_pairs) {
  GuidelineReport report;
  report.profile = GradeTrialList(corpus, trials);
  const auto &per = report.profile.per_speaker;

  GuidelineCheck g1{1, "equal same- and different-speaker pairs per speaker", CheckStatus::kPass, {}, {}};
  for (const auto &[sid, counts] : per) {
    std::size_t same = CountKind(counts, PairKind::kSameSpeaker);
    std::size_t diff = CountKind(counts, PairKind::kDifferentSpeaker);
    if (same != diff) {
      g1.status = CheckStatus::kFail;
      g1.first_offender = sid;
      g1.detail = "speaker " + sid + " has " + std::to_string(same) + " same and " +
                  std::to_string(diff) + " different pairs";
      break;
    }
  }

  GuidelineCheck g2{2, "at least " + std::to_string(min_diff_pairs) +
                           " different-speaker pairs per speaker",
                    CheckStatus::kPass, {}, {}};
  for (const auto &[sid, counts] : per) {
    std::size_t diff = CountKind(counts, PairKind::kDifferentSpeaker);
    if (diff < min_diff_pairs) {
      g2.status = CheckStatus::kFail;
      g2.first_offender = sid;
      g2.detail = "speaker " + sid + " has " + std::to_string(diff) + " different pairs";
      break;
    }
  }

  GuidelineCheck g3{3, "equal number of pairs per speaker", CheckStatus::kPass, {}, {}};
  if (!per.empty()) {
    std::map<std::string, std::size_t> totals;
    for (const auto &[sid, counts] : per) totals[sid] = Total(counts);
    std::size_t mode = Mode(totals);
    for (const auto &[sid, total] : totals) {
      if (total != mode) {
        g3.status = CheckStatus::kFail;
        g3.first_offender = sid;
        g3.detail = "speaker " + sid + " has " + std::to_string(total) +
                    " pairs; most speakers have " + std::to_string(mode);
        break;
      }
    }
  }

  GuidelineCheck g4{4, "equal proportion of each difficulty grade per speaker",
                    CheckStatus::kPass, {}, {}};
  if (!per.empty()) {
    std::map<std::string, GradeCounts> mixes;
    for (const auto &[sid, counts] : per) mixes[sid] = Proportions(counts);
    GradeCounts mode = Mode(mixes);
    for (const auto &[sid, mix] : mixes) {
      if (mix != mode) {
        g4.status = CheckStatus::kFail;
        g4.first_offender = sid;
        g4.detail = "speaker " + sid + " grade mix: " + ProfileSummary(per.at(sid));
        break;
      }
    }
  }

  GuidelineCheck g5{5, "grade profile representative of the deployment scenario",
                    CheckStatus::kManual, ProfileSummary(report.profile.total), {}};

  if (per.empty())
    for (GuidelineCheck *c : {&g1, &g2, &g3, &g4}) c->detail = "no trials";

  report.checks = {g1, g2, g3, g4, g5};
  return report;
}

}  // namespace fairtrial
