// include/fairtrial/text_io.h

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

#ifndef FAIRTRIAL_TEXT_IO_H_
#define FAIRTRIAL_TEXT_IO_H_

#include <string>
#include <string_view>
#include <vector>

namespace fairtrial {

std::string_view Trim(std::string_view s);
std::string ToLower(std::string_view s);

/// Splits on a single delimiter character, keeping empty fields.
std::vector<std::string_view> Split(std::string_view s, char delim);

/// Splits on runs of spaces and tabs, dropping empty fields.
std::vector<std::string_view> SplitWhitespace(std::string_view s);

/// Parses a full string as a finite double; false on trailing junk.
bool ParseDouble(std::string_view s, double *out);

std::string ReadFile(const std::string &path);

/// Writes to `<path>.tmp.<pid>` then renames over `path`, so readers never
/// observe a partially written file.
void WriteFileAtomic(const std::string &path, std::string_view contents);

/// Fixed-point formatting without locale effects.
std::string FormatFixed(double value, int decimals);

}  // namespace fairtrial

#endif  // FAIRTRIAL_TEXT_IO_H_
