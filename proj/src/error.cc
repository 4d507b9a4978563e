// src/error.cc

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

#include "fairtrial/error.h"

namespace fairtrial {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kDuplicateKey: return "duplicate-key";
    case ErrorKind::kUnresolved: return "unresolved";
    case ErrorKind::kUngradeable: return "ungradeable";
    case ErrorKind::kDegeneratePair: return "degenerate-pair";
    case ErrorKind::kInvalidPair: return "invalid-pair";
    case ErrorKind::kConflict: return "conflict";
    case ErrorKind::kEmptyCorpus: return "empty-corpus";
    case ErrorKind::kNoEligibleSpeakers: return "no-eligible-speakers";
    case ErrorKind::kMissingScore: return "missing-score";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kGuidelineViolation: return "guideline-violation";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

}  // namespace fairtrial
