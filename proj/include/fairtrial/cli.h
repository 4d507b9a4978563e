// include/fairtrial/cli.h

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

#ifndef FAIRTRIAL_CLI_H_
#define FAIRTRIAL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace fairtrial::cli {

inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
};

/// Runs one subcommand: generate, variants, grade, stats, simulate-scores,
/// eval, robustness or validate. Returns 0 on success, 1 on a usage error
/// (usage text goes to `err`), 2 on a data or validation error (one
/// `error[<kind>]: <message>` line on `err`). Every successful run emits a
/// run manifest next to its outputs.
int Dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace fairtrial::cli

#endif  // FAIRTRIAL_CLI_H_
