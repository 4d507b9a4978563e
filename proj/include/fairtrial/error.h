// include/fairtrial/error.h

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

#ifndef FAIRTRIAL_ERROR_H_
#define FAIRTRIAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairtrial {

enum class ErrorKind {
  kFormat,
  kDuplicateKey,
  kUnresolved,
  kUngradeable,
  kDegeneratePair,
  kInvalidPair,
  kConflict,
  kEmptyCorpus,
  kNoEligibleSpeakers,
  kMissingScore,
  kInvalidArgument,
  kGuidelineViolation,
  kIo,
};

std::string_view ToString(ErrorKind kind);

/// All data and validation failures raised by the library. The CLI maps
/// these to exit code 2 and prints `error[<kind>]: <message>`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fairtrial

#endif  // FAIRTRIAL_ERROR_H_
