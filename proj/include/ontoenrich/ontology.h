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

#ifndef ONTOENRICH_ONTOLOGY_H_
#define ONTOENRICH_ONTOLOGY_H_

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace ontoenrich {

enum class RelationKind {
  kSynonymy,
  kHypernymy,
  kHyponymy,
  kMeronymy,
  kHolonymy,
  kInstanceOf,
  kRelatedTo,
};

// Lowercase file literal: "synonymy", ..., "instance-of", "related-to".
std::string_view RelationName(RelationKind kind);
std::optional<RelationKind> ParseRelation(std::string_view name);

// Senses are numbered from 1 within a concept.
using SenseId = int;

// Reference to a concept or instance, optionally pinned to one sense.
// Written as "<id>" or "<id>#<sense>". An unpinned reference to a concept
// denotes its first sense.
struct EntityRef {
  std::string id;
  std::optional<SenseId> sense;

  SenseId resolved_sense() const { return sense.value_or(1); }
  std::string ToString() const;
  static EntityRef Parse(std::string_view text, int line = 0);

  auto operator<=>(const EntityRef &) const = default;
};

enum class Provenance { kOriginal, kEnriched };

std::string_view ProvenanceName(Provenance provenance);

// Which pattern produced an enriched axiom and how many hits it received.
struct Evidence {
  std::string pattern;
  unsigned long long hits = 0;

  auto operator<=>(const Evidence &) const = default;
};

struct Axiom {
  RelationKind relation = RelationKind::kRelatedTo;
  EntityRef subject;
  EntityRef object;
  Provenance provenance = Provenance::kOriginal;
  std::optional<Evidence> evidence;

  bool operator==(const Axiom &) const = default;
};

struct Concept {
  std::string id;
  std::string label;
  int sense_count = 1;
  // Grammatical categories from the lexicon column, e.g. {"noun", "verb"}.
  std::set<std::string> categories;

  bool operator==(const Concept &) const = default;
};

struct Instance {
  std::string id;
  std::string label;
  std::string concept_id;

  bool operator==(const Instance &) const = default;
};

struct TermMatch {
  enum class Kind { kConcept, kInstance };
  std::string id;
  Kind kind = Kind::kConcept;

  bool operator==(const TermMatch &) const = default;
};

struct SenseNode {
  std::string concept_id;
  SenseId sense = 1;

  auto operator<=>(const SenseNode &) const = default;
};

// Hypernymy chain from one sense of a concept up to a root.
using SensePath = std::vector<SenseNode>;

// Canonical sort key of an axiom: relation literal, subject, object.
using AxiomKey = std::tuple<std::string, std::string, std::string>;

// The <concepts, relations, instances, axioms> ontology model.
//
// Hypernymy and meronymy are the stored directions: hypernymy(a, b) means a is
// a hypernym of b, meronymy(a, b) means a is a part of b. Adding a hyponymy or
// holonymy axiom stores the mirrored hypernymy or meronymy axiom, and
// HasAxiom answers both directions.
class Ontology {
 public:
  Ontology() = default;

  // Parses the tab-separated ontology format. Throws Error(kParse) with the
  // line number for malformed records and Error(kValidation) for records
  // that break an invariant (dangling ids, duplicate ids, cycles).
  static Ontology Parse(std::string_view text);
  static Ontology Load(const std::filesystem::path &path);

  // Canonical serialization: concepts by id, then instances by id, then
  // axioms by (relation, subject, object).
  std::string Serialize() const;
  void Save(const std::filesystem::path &path) const;

  void AddConcept(Concept c);
  void AddInstance(Instance instance);

  // Inserts the axiom after direction normalization. Returns false when an
  // axiom with the same (relation, subject, object) is already present.
  bool AddAxiom(Axiom axiom);

  bool HasAxiom(RelationKind relation, const EntityRef &subject,
                const EntityRef &object) const;

  const Concept *FindConcept(std::string_view id) const;
  const Instance *FindInstance(std::string_view id) const;
  bool HasEntity(std::string_view id) const;

  // Looks up a surface string against concept labels, then instance labels.
  // The surface is normalized before matching; "" never matches.
  std::optional<TermMatch> ContainsTerm(std::string_view surface) const;

  // One path per sense of the concept, each ending at a root sense. When a
  // sense has several hypernyms the smallest (id, sense) parent is followed.
  // Throws Error(kLookup) for an unknown concept.
  std::vector<SensePath> SemanticPathsFrom(std::string_view concept_id) const;

  const std::map<std::string, Concept, std::less<>> &concepts() const {
    return concepts_;
  }
  const std::map<std::string, Instance, std::less<>> &instances() const {
    return instances_;
  }
  const std::map<AxiomKey, Axiom> &axioms() const { return axioms_; }

  // Relation kinds used by at least one axiom.
  std::set<RelationKind> relations() const;

  bool empty() const {
    return concepts_.empty() && instances_.empty() && axioms_.empty();
  }

  bool operator==(const Ontology &other) const {
    return concepts_ == other.concepts_ && instances_ == other.instances_ &&
           axioms_ == other.axioms_;
  }

 private:
  void ValidateRef(const EntityRef &ref, bool concept_only) const;
  std::vector<SenseNode> ParentsOf(const SenseNode &node) const;
  bool IsAncestor(const SenseNode &candidate, const SenseNode &node) const;

  std::map<std::string, Concept, std::less<>> concepts_;
  std::map<std::string, Instance, std::less<>> instances_;
  std::map<AxiomKey, Axiom> axioms_;
  // Normalized label -> match; concepts shadow instances.
  std::unordered_map<std::string, TermMatch> labels_;
  // Child sense -> hypernym senses, kept sorted.
  std::map<SenseNode, std::set<SenseNode>> parents_;
};

// Rewrites hyponymy and holonymy into the stored hypernymy and meronymy
// directions; other axioms are returned unchanged.
Axiom CanonicalAxiom(Axiom axiom);
AxiomKey AxiomKeyOf(const Axiom &axiom);

// Turns a surface term into an identifier: normalized, spaces become '_'.
std::string MakeEntityId(std::string_view surface);

}  // namespace ontoenrich

#endif  // ONTOENRICH_ONTOLOGY_H_
