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

#ifndef ONTOENRICH_ERROR_H_
#define ONTOENRICH_ERROR_H_

#include <stdexcept>
#include <string>

namespace ontoenrich {

enum class ErrorKind {
  kParse,            // malformed input record
  kValidation,       // well-formed input that violates a model invariant
  kLookup,           // unknown identifier
  kDomain,           // operation called outside its precondition
  kDegenerate,       // NGD denominator is zero or negative
  kUnresolvedSense,  // no sense path of a target could be scored
  kConflict,         // contradicting placement decisions
  kIo,
  kConfig,
};

const char *ErrorKindName(ErrorKind kind);

// All library failures are reported with this exception type. Parse errors
// carry the 1-based line number of the offending record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message, int line = 0)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

}  // namespace ontoenrich

#endif  // ONTOENRICH_ERROR_H_
