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

// Semantic relation extraction: lexico-syntactic pattern catalogue, query
// instantiation in singular and plural, hit-count arbitration with the
// related-to fallback, and construction of enrichment axioms.

#ifndef ONTOENRICH_PATTERNS_H_
#define ONTOENRICH_PATTERNS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoenrich/hits.h"
#include "ontoenrich/ontology.h"

namespace ontoenrich {

// A surface template such as "{X} is a kind of {Y}". Templates of one group
// are variants of the same pattern and have their counts summed.
struct PatternTemplate {
  std::string id;
  RelationKind relation = RelationKind::kRelatedTo;
  std::string group;
  std::string text;

  bool operator==(const PatternTemplate &) const = default;
};

class PatternCatalogue {
 public:
  PatternCatalogue() = default;

  // Validates and appends a template: unique id, exactly one {X} and one {Y}
  // as whole words, no negation, relation other than related-to.
  void Add(PatternTemplate pattern);

  // "P\t<id>\t<relation>\t<group>\t<template>" lines; '#' starts a comment.
  static PatternCatalogue Parse(std::string_view text);
  static PatternCatalogue Load(const std::filesystem::path &path);

  const std::vector<PatternTemplate> &templates() const { return templates_; }
  bool empty() const { return templates_.empty(); }

  // SHA-256 of the canonical "P" serialization, recorded in run manifests.
  std::string Digest() const;

 private:
  std::vector<PatternTemplate> templates_;
};

// Naive English number inflection applied to the last word of a term:
// +s, +es after s/x/z/ch/sh, consonant+y -> ies, and the reverse. Irregular
// forms come from an optional "<singular>\t<plural>" exceptions file.
class Inflector {
 public:
  Inflector() = default;
  static Inflector Parse(std::string_view text);
  static Inflector Load(const std::filesystem::path &path);

  void AddException(std::string_view singular, std::string_view plural);

  std::string Pluralize(std::string_view term) const;
  std::string Singularize(std::string_view term) const;

 private:
  std::string PluralWord(const std::string &word) const;
  std::string SingularWord(const std::string &word) const;

  std::map<std::string, std::string> plural_of_;
  std::map<std::string, std::string> singular_of_;
};

// True when any word of the text is a negation ("no", "not", "never", ...,
// or a "n't" contraction).
bool ContainsNegation(std::string_view text);

enum class GrammaticalNumber { kSingular, kPlural };

struct PatternQuery {
  std::string pattern_id;
  std::string group;
  RelationKind relation = RelationKind::kRelatedTo;
  GrammaticalNumber number = GrammaticalNumber::kSingular;
  std::string query;

  bool operator==(const PatternQuery &) const = default;
};

// Expands every template for (missing, ontology term) in singular form
// ("{X} is a {Y}" -> "corporate body is an organization") and plural form
// ("corporate bodies are organizations"). "a"/"an" agree with the following
// word by its initial letter. Queries containing a negation are never
// produced, and duplicate strings within one template are dropped.
std::vector<PatternQuery> InstantiatePatterns(
    std::string_view missing_term, std::string_view ontology_term,
    const PatternCatalogue &catalogue, const Inflector &inflector = {});

struct PatternCount {
  PatternQuery query;
  HitCount hits = 0;
};

// Suggested relation for one (missing term, ontology term) pair, with the
// count of every query issued.
struct RelationSuggestion {
  std::string missing_term;
  std::string target_term;
  RelationKind relation = RelationKind::kRelatedTo;
  // Winning group and its best single pattern; unset for the fallback.
  std::optional<std::string> winner_group;
  std::optional<std::string> winner_pattern;
  HitCount winner_hits = 0;   // summed count of the winning group
  bool tie = false;           // several groups shared the maximum
  std::map<std::string, HitCount> group_hits;
  std::vector<PatternCount> audit;

  // Filled in by placement.
  std::optional<std::string> missing_id;
  std::optional<std::string> target_id;
  std::vector<SenseId> senses;
};

// Issues every instantiated query and suggests the relation of the group
// with the largest summed count. Equal maxima prefer instance-of, then
// hyponymy, meronymy, synonymy, then group name. An all-zero profile yields
// related-to with no winner.
RelationSuggestion ExtractRelation(std::string_view missing_term,
                                   std::string_view ontology_term,
                                   const HitCountProvider &provider,
                                   const PatternCatalogue &catalogue,
                                   const Inflector &inflector = {});

// One line per issued query: missing, target, pattern id, group, relation,
// number, query, count.
std::string AuditToTsv(const std::vector<RelationSuggestion> &suggestions);

struct EnrichedAxiom {
  Axiom axiom;                 // canonical direction, provenance enriched
  std::string missing_term;
  std::string missing_id;
  bool as_instance = false;    // the missing term enters as an instance
};

struct EnrichmentAxiomSet {
  std::vector<EnrichedAxiom> axioms;   // sorted by AxiomKeyOf
};

// One axiom per suggestion and resolved sense (unpinned when no sense was
// resolved). Missing and target ids default to MakeEntityId of the terms.
// Duplicate (relation, subject, object) triples collapse to one axiom.
EnrichmentAxiomSet BuildAxioms(const std::vector<RelationSuggestion> &suggestions);

}  // namespace ontoenrich

#endif  // ONTOENRICH_PATTERNS_H_
