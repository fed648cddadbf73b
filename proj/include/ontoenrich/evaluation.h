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

#ifndef ONTOENRICH_EVALUATION_H_
#define ONTOENRICH_EVALUATION_H_

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoenrich/ontology.h"

namespace ontoenrich {

struct Placement {
  std::string term;
  std::string target;
  SenseId sense = 1;
  RelationKind relation = RelationKind::kRelatedTo;

  auto operator<=>(const Placement &) const = default;
};

struct DomainJudgments {
  std::set<std::string> eliminated;
  std::set<std::string> retained;
  std::set<Placement> placements;
};

// Eliminated/retained verdicts and placements per domain. The same format
// holds expert judgments and system output:
//
//   E\t<domain>\t<eliminated|retained>\t<term>
//   X\t<domain>\t<term>\t<target>\t<sense>\t<relation>
//
// Terms and targets are normalized on input.
class Judgments {
 public:
  // Throws Error(kValidation) when a term is both eliminated and retained in
  // one domain.
  void AddVerdict(std::string_view domain, bool eliminated,
                  std::string_view term);
  void AddPlacement(std::string_view domain, Placement placement);

  static Judgments Parse(std::string_view text);
  static Judgments Load(const std::filesystem::path &path);
  std::string Serialize() const;

  const std::map<std::string, DomainJudgments> &domains() const {
    return domains_;
  }

 private:
  std::map<std::string, DomainJudgments> domains_;
};

// |system ∩ expert| / |system|; unset when the system set is empty.
std::optional<double> EliminationPrecision(
    const std::set<std::string> &system_eliminated,
    const std::set<std::string> &expert_eliminated);
std::optional<double> RetentionPrecision(
    const std::set<std::string> &system_retained,
    const std::set<std::string> &expert_retained);

// A system placement is correct when an expert placement agrees on term,
// target and sense, and on relation when `require_relation` is set.
std::optional<double> EnrichmentPrecision(
    const std::set<Placement> &system_placements,
    const std::set<Placement> &expert_placements,
    bool require_relation = true);

size_t CountMatchingPlacements(const std::set<Placement> &system_placements,
                               const std::set<Placement> &expert_placements,
                               bool require_relation);

struct DomainReport {
  std::string domain;
  size_t expert_eliminated = 0;
  size_t system_eliminated = 0;
  size_t correct_eliminated = 0;
  std::optional<double> elimination_precision;
  std::optional<double> error_rate;   // 1 - elimination precision
  size_t expert_retained = 0;
  size_t system_retained = 0;
  size_t correct_retained = 0;
  std::optional<double> retention_precision;
  size_t expert_placements = 0;
  size_t system_placements = 0;
  size_t correct_placements = 0;
  std::optional<double> enrichment_precision;
};

struct PrecisionReport {
  std::vector<DomainReport> domains;
  std::vector<std::string> warnings;

  const DomainReport *Find(std::string_view domain) const;

  // Header row plus one row per domain; undefined precisions print "NA".
  std::string ToTsv() const;
};

// Reports every domain of the expert judgments. Domains only the system
// covers are listed in `warnings`.
PrecisionReport Evaluate(const Judgments &system, const Judgments &expert,
                         bool require_relation = true);

}  // namespace ontoenrich

#endif  // ONTOENRICH_EVALUATION_H_
