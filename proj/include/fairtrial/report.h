// include/fairtrial/report.h

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

#ifndef FAIRTRIAL_REPORT_H_
#define FAIRTRIAL_REPORT_H_

#include <span>
#include <string>

#include "json.hpp"

#include "fairtrial/grading.h"
#include "fairtrial/guidelines.h"
#include "fairtrial/metrics.h"
#include "fairtrial/robustness.h"
#include "fairtrial/stats.h"
#include "fairtrial/trialgen.h"

namespace fairtrial {

using Json = nlohmann::ordered_json;

Json ToJson(const GradeHistogram &histogram);

/// Sidecar manifest for a generated list: config, included and excluded
/// speakers with reasons, and the grade histogram.
Json GenerationManifest(const TrialList &list, const GradeHistogram &histogram);

/// Per-group eer, normalized and raw minDCF, thresholds, counts and fnr at
/// each requested fpr level.
Json EvaluationJson(const Evaluation &eval, const DcfParams &params, bool normalize,
                    std::span<const double> fpr_levels);

/// Tab-separated `group threshold fpr fnr`, one row per operating point.
std::string DetPointsTable(const Evaluation &eval);

/// Nested group -> n -> seed -> metrics, plus failed cells and speaker
/// counts.
Json GridJson(const GridResults &results);

/// Tab-separated `group n seed n_target n_nontarget eer min_dcf min_dcf_raw`.
std::string GridTable(const GridResults &results);

Json SpreadJson(std::span<const SpreadStats> spread, Metric metric);
std::string SpreadTable(std::span<const SpreadStats> spread, Metric metric);

Json ToJson(const GuidelineReport &report);
Json ToJson(std::span<const NationalityStats> rows);

}  // namespace fairtrial

#endif  // FAIRTRIAL_REPORT_H_
