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

#ifndef ONTOENRICH_ENRICHMENT_H_
#define ONTOENRICH_ENRICHMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoenrich/hits.h"
#include "ontoenrich/ontology.h"
#include "ontoenrich/patterns.h"
#include "ontoenrich/relatedness.h"

namespace ontoenrich {

// How sense paths are compared with a missing term. Scores are NTR values
// against the batch denominator of the run's relatedness matrix.
struct ScoringContext {
  const HitCountProvider *provider = nullptr;
  NgdConfig ngd;
  double denominator = 1.0;   // values <= 0 are treated as 1
  size_t path_depth = 5;      // ancestors considered above the target sense
};

enum class PlacementCase { kCase1, kCase2, kCase3Composite };

std::string_view PlacementCaseName(PlacementCase c);

struct PathScore {
  SenseId sense = 1;
  std::vector<std::string> labels;   // ancestor labels that were scored
  std::optional<double> score;       // unset when no label could be scored
};

struct PlacementDecision {
  std::string missing_term;
  std::string target_id;
  std::vector<SenseId> senses;       // chosen senses, ascending
  RelationKind relation = RelationKind::kRelatedTo;
  PlacementCase placement = PlacementCase::kCase1;
  bool disambiguated = false;        // target had several senses
  std::vector<PathScore> path_scores;
  RelationSuggestion suggestion;
};

// Scores each sense path of a multi-sense target by the mean NTR between the
// missing term and the labels of the path's ancestors (up to path_depth), and
// returns the senses with the highest score. Labels without usable hits are
// skipped. Throws Error(kDomain) for a target with fewer than two senses,
// Error(kLookup) for an unknown target and Error(kUnresolvedSense) when no
// path can be scored.
std::vector<SenseId> DisambiguateSense(std::string_view missing_term,
                                       std::string_view target_id,
                                       const Ontology &ontology,
                                       const ScoringContext &ctx,
                                       std::vector<PathScore> *audit = nullptr);

// Case 1 for a single-sense target, Case 2 (via DisambiguateSense) for a
// multi-sense target. The target term must name a concept of the ontology.
PlacementDecision PlaceConcept(const RelationSuggestion &suggestion,
                               const Ontology &ontology,
                               const ScoringContext &ctx);

// Places every suggestion, grouping by missing term: a term related to
// several ontology concepts gets one decision per concept, each tagged
// case3-composite. Output is ordered by (missing term, target id). When
// `unresolved` is non-null, suggestions failing with kUnresolvedSense are
// collected there instead of aborting.
std::vector<PlacementDecision> PlaceAll(
    const std::vector<RelationSuggestion> &suggestions,
    const Ontology &ontology, const ScoringContext &ctx,
    std::vector<RelationSuggestion> *unresolved = nullptr);

struct EnrichmentResult {
  Ontology ontology;
  std::vector<PlacementDecision> decisions;
  size_t sense_ties = 0;   // decisions that attached to more than one sense
  std::vector<std::string> added_concepts;
  std::vector<std::string> added_instances;
  size_t added_axioms = 0;
  std::vector<RelationSuggestion> unresolved;   // reported, not applied
};

// Inserts each missing term once (as an instance when any of its decisions
// is instance-of, otherwise as a single-sense concept) and one axiom per
// decision and chosen sense. The input ontology is never modified, and
// re-applying the same decisions changes nothing. Throws Error(kConflict)
// when two decisions give different relations for the same
// (term, target, sense).
EnrichmentResult EnrichOntology(const Ontology &ontology,
                                const std::vector<PlacementDecision> &decisions);

// One line per decision: term, target, senses, relation, case, winning
// pattern, hit count. Unresolved suggestions follow with case "unresolved";
// a "# sense ties" summary line closes the report.
std::string EnrichmentReportTsv(const EnrichmentResult &result);

}  // namespace ontoenrich

#endif  // ONTOENRICH_ENRICHMENT_H_
