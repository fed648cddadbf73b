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

#include "ontoenrich/enrichment.h"

#include <algorithm>
#include <map>
#include <set>

#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"

namespace ontoenrich {

namespace {

std::string SensesToString(const std::vector<SenseId> &senses) {
  if (senses.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < senses.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(senses[i]);
  }
  return out;
}

const Concept &ResolveTarget(std::string_view term, const Ontology &ontology) {
  auto match = ontology.ContainsTerm(term);
  if (!match) {
    throw Error(ErrorKind::kLookup,
                "placement target '" + std::string(term) +
                    "' is not in the ontology");
  }
  if (match->kind != TermMatch::Kind::kConcept) {
    throw Error(ErrorKind::kLookup, "placement target '" + std::string(term) +
                                        "' is an instance, not a concept");
  }
  return *ontology.FindConcept(match->id);
}

// Id for a new entity: reuse an entity already carrying this label (a
// previous run), otherwise the first free "<base>", "<base>_2", ...
std::string AssignId(const std::string &term, const Ontology &ontology) {
  std::string base = MakeEntityId(term);
  for (int n = 1;; ++n) {
    std::string id = n == 1 ? base : base + "_" + std::to_string(n);
    const Concept *c = ontology.FindConcept(id);
    const Instance *i = ontology.FindInstance(id);
    if (!c && !i) return id;
    const std::string &label = c ? c->label : i->label;
    if (NormalizeTerm(label) == term) return id;
  }
}

}  // namespace

std::string_view PlacementCaseName(PlacementCase c) {
  switch (c) {
    case PlacementCase::kCase1: return "case1";
    case PlacementCase::kCase2: return "case2";
    case PlacementCase::kCase3Composite: return "case3-composite";
  }
  return "case1";
}

std::vector<SenseId> DisambiguateSense(std::string_view missing_term,
                                       std::string_view target_id,
                                       const Ontology &ontology,
                                       const ScoringContext &ctx,
                                       std::vector<PathScore> *audit) {
  const Concept *target = ontology.FindConcept(target_id);
  if (!target) {
    throw Error(ErrorKind::kLookup,
                "unknown concept '" + std::string(target_id) + "'");
  }
  if (target->sense_count < 2) {
    throw Error(ErrorKind::kDomain, "concept '" + target->id +
                                        "' has a single sense");
  }
  const HitCountProvider &provider = *ctx.provider;
  double denominator = ctx.denominator > 0 ? ctx.denominator : 1.0;
  HitCount total = provider.TotalDocs();
  HitCount miss_hits = provider.Hits(missing_term);

  std::vector<PathScore> scores;
  for (const SensePath &path : ontology.SemanticPathsFrom(target->id)) {
    PathScore ps{path.front().sense, {}, std::nullopt};
    double sum = 0;
    size_t n = 0;
    for (size_t i = 1; i < path.size() && i <= ctx.path_depth; ++i) {
      const std::string &label = ontology.FindConcept(path[i].concept_id)->label;
      HitCount label_hits = provider.Hits(label);
      if (miss_hits == 0 || label_hits == 0 ||
          std::max(miss_hits, label_hits) >= total) {
        continue;
      }
      PairCounts counts{miss_hits, label_hits,
                        provider.PairHits(missing_term, label), total};
      sum += 1.0 - NormalizedDistance(counts, ctx.ngd) / denominator;
      ++n;
      ps.labels.push_back(NormalizeTerm(label));
    }
    if (n > 0) ps.score = sum / static_cast<double>(n);
    scores.push_back(std::move(ps));
  }

  std::optional<double> best;
  for (const PathScore &ps : scores) {
    if (ps.score && (!best || *ps.score > *best)) best = ps.score;
  }
  if (audit) *audit = scores;
  if (!best) {
    throw Error(ErrorKind::kUnresolvedSense,
                "no sense path of '" + target->id +
                    "' could be scored against '" + std::string(missing_term) +
                    "'");
  }
  std::vector<SenseId> chosen;
  for (const PathScore &ps : scores) {
    if (ps.score && *ps.score == *best) chosen.push_back(ps.sense);
  }
  return chosen;
}

PlacementDecision PlaceConcept(const RelationSuggestion &suggestion,
                               const Ontology &ontology,
                               const ScoringContext &ctx) {
  const Concept &target = ResolveTarget(suggestion.target_term, ontology);
  PlacementDecision d;
  d.missing_term = suggestion.missing_term;
  d.target_id = target.id;
  d.relation = suggestion.relation;
  d.suggestion = suggestion;
  if (target.sense_count == 1) {
    d.placement = PlacementCase::kCase1;
    d.senses = {1};
  } else {
    d.placement = PlacementCase::kCase2;
    d.disambiguated = true;
    d.senses = DisambiguateSense(suggestion.missing_term, target.id, ontology,
                                 ctx, &d.path_scores);
  }
  d.suggestion.target_id = d.target_id;
  d.suggestion.senses = d.senses;
  return d;
}

std::vector<PlacementDecision> PlaceAll(
    const std::vector<RelationSuggestion> &suggestions,
    const Ontology &ontology, const ScoringContext &ctx,
    std::vector<RelationSuggestion> *unresolved) {
  std::map<std::string, std::vector<const RelationSuggestion *>> by_term;
  for (const RelationSuggestion &s : suggestions) {
    by_term[s.missing_term].push_back(&s);
  }
  std::vector<PlacementDecision> out;
  for (const auto &[term, group] : by_term) {
    std::vector<PlacementDecision> decisions;
    for (const RelationSuggestion *s : group) {
      try {
        decisions.push_back(PlaceConcept(*s, ontology, ctx));
      } catch (const Error &e) {
        if (!unresolved || e.kind() != ErrorKind::kUnresolvedSense) throw;
        unresolved->push_back(*s);
      }
    }
    std::set<std::string> targets;
    for (const auto &d : decisions) targets.insert(d.target_id);
    if (targets.size() > 1) {
      for (auto &d : decisions) d.placement = PlacementCase::kCase3Composite;
    }
    std::stable_sort(decisions.begin(), decisions.end(),
                     [](const PlacementDecision &a, const PlacementDecision &b) {
                       return a.target_id < b.target_id;
                     });
    for (auto &d : decisions) out.push_back(std::move(d));
  }
  return out;
}

EnrichmentResult EnrichOntology(
    const Ontology &ontology, const std::vector<PlacementDecision> &decisions) {
  using Slot = std::tuple<std::string, std::string, SenseId>;
  std::map<Slot, const PlacementDecision *> slots;
  for (const PlacementDecision &d : decisions) {
    std::vector<SenseId> senses = d.senses.empty() ? std::vector<SenseId>{1}
                                                   : d.senses;
    for (SenseId sense : senses) {
      Slot slot{d.missing_term, d.target_id, sense};
      auto [it, inserted] = slots.emplace(slot, &d);
      if (!inserted && it->second->relation != d.relation) {
        throw Error(ErrorKind::kConflict,
                    "conflicting decisions for ('" + d.missing_term + "', '" +
                        d.target_id + "#" + std::to_string(sense) + "'): " +
                        std::string(RelationName(it->second->relation)) +
                        " vs " + std::string(RelationName(d.relation)));
      }
    }
    if (!ontology.FindConcept(d.target_id)) {
      throw Error(ErrorKind::kLookup,
                  "decision target '" + d.target_id + "' is not a concept");
    }
  }

  EnrichmentResult result;
  result.ontology = ontology;
  result.decisions = decisions;
  Ontology &out = result.ontology;

  // Terms in lexicographic order; instance-of anywhere makes an instance.
  std::map<std::string, const PlacementDecision *> instance_of;
  std::set<std::string> terms;
  for (const PlacementDecision &d : decisions) {
    terms.insert(d.missing_term);
    if (d.relation == RelationKind::kInstanceOf) {
      auto &slot = instance_of[d.missing_term];
      if (!slot || d.target_id < slot->target_id) slot = &d;
    }
  }
  std::map<std::string, std::string> ids;
  for (const std::string &term : terms) {
    std::string id = AssignId(term, out);
    ids[term] = id;
    if (out.HasEntity(id)) continue;
    if (auto it = instance_of.find(term); it != instance_of.end()) {
      out.AddInstance({id, term, it->second->target_id});
      result.added_instances.push_back(id);
    } else {
      out.AddConcept({id, term, 1, {}});
      result.added_concepts.push_back(id);
    }
  }

  std::vector<RelationSuggestion> resolved;
  for (const PlacementDecision &d : decisions) {
    RelationSuggestion s = d.suggestion;
    s.missing_term = d.missing_term;
    s.relation = d.relation;
    s.missing_id = ids.at(d.missing_term);
    s.target_id = d.target_id;
    s.senses = d.senses;
    // Single-sense targets are referenced without a sense suffix.
    if (ontology.FindConcept(d.target_id)->sense_count == 1) s.senses.clear();
    if (d.senses.size() > 1) ++result.sense_ties;
    resolved.push_back(std::move(s));
  }
  for (EnrichedAxiom &ea : BuildAxioms(resolved).axioms) {
    if (out.AddAxiom(std::move(ea.axiom))) ++result.added_axioms;
  }
  return result;
}

std::string EnrichmentReportTsv(const EnrichmentResult &result) {
  std::string out = "# term\ttarget\tsenses\trelation\tcase\tpattern\thits\n";
  for (const PlacementDecision &d : result.decisions) {
    const RelationSuggestion &s = d.suggestion;
    out += d.missing_term + "\t" + d.target_id + "\t" +
           SensesToString(d.senses) + "\t" +
           std::string(RelationName(d.relation)) + "\t" +
           std::string(PlacementCaseName(d.placement)) + "\t" +
           s.winner_pattern.value_or("-") + "\t" +
           std::to_string(s.winner_hits) + "\n";
  }
  for (const RelationSuggestion &s : result.unresolved) {
    out += s.missing_term + "\t" + s.target_id.value_or(s.target_term) +
           "\t-\t" + std::string(RelationName(s.relation)) +
           "\tunresolved\t" + s.winner_pattern.value_or("-") + "\t" +
           std::to_string(s.winner_hits) + "\n";
  }
  out += "# sense ties\t" + std::to_string(result.sense_ties) + "\n";
  return out;
}

}  // namespace ontoenrich
