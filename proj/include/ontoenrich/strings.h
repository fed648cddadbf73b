// Copyright 2026 The Ontoenrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOENRICH_STRINGS_H_
#define ONTOENRICH_STRINGS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ontoenrich {

// Matching policy shared by concept labels, n-grams, gazetteer keys and hit
// queries: ASCII case folding, internal whitespace collapsed to one space,
// leading and trailing whitespace removed. Non-ASCII bytes pass through.
std::string NormalizeTerm(std::string_view text);

std::string_view Trim(std::string_view text);

std::vector<std::string> SplitTabs(std::string_view line);
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Reads a UTF-8 text file. Throws Error(kIo) when the file cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

// Splits into lines, dropping a trailing '\r' from each.
std::vector<std::string> SplitLines(std::string_view text);

// Writes atomically enough for batch use: truncates and writes the whole
// buffer, throws Error(kIo) on failure.
void WriteFile(const std::filesystem::path &path, std::string_view contents);

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);

// Formats with a fixed number of decimals, independent of the locale.
std::string FormatFixed(double value, int decimals);

// Parses a non-negative decimal integer; throws Error(kParse) otherwise.
unsigned long long ParseCount(std::string_view text, int line = 0);

}  // namespace ontoenrich

#endif  // ONTOENRICH_STRINGS_H_
