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

#include "ontoenrich/ontology.h"

#include <algorithm>
#include <array>
#include <utility>

#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"

namespace ontoenrich {

namespace {

constexpr std::array<std::pair<RelationKind, std::string_view>, 7>
    kRelationNames = {{
        {RelationKind::kSynonymy, "synonymy"},
        {RelationKind::kHypernymy, "hypernymy"},
        {RelationKind::kHyponymy, "hyponymy"},
        {RelationKind::kMeronymy, "meronymy"},
        {RelationKind::kHolonymy, "holonymy"},
        {RelationKind::kInstanceOf, "instance-of"},
        {RelationKind::kRelatedTo, "related-to"},
    }};

bool ValidId(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (c == '#' || c == '\t' || c == ' ' || c == '\n' || c == '\r') {
      return false;
    }
  }
  return true;
}

}  // namespace

Axiom CanonicalAxiom(Axiom axiom) {
  if (axiom.relation == RelationKind::kHyponymy) {
    axiom.relation = RelationKind::kHypernymy;
    std::swap(axiom.subject, axiom.object);
  } else if (axiom.relation == RelationKind::kHolonymy) {
    axiom.relation = RelationKind::kMeronymy;
    std::swap(axiom.subject, axiom.object);
  }
  return axiom;
}

AxiomKey AxiomKeyOf(const Axiom &axiom) {
  return {std::string(RelationName(axiom.relation)), axiom.subject.ToString(),
          axiom.object.ToString()};
}

namespace {

SenseNode NodeOf(const EntityRef &ref) {
  return {ref.id, ref.resolved_sense()};
}

}  // namespace

std::string_view RelationName(RelationKind kind) {
  for (const auto &[k, name] : kRelationNames) {
    if (k == kind) return name;
  }
  return "related-to";
}

std::optional<RelationKind> ParseRelation(std::string_view name) {
  for (const auto &[k, literal] : kRelationNames) {
    if (literal == name) return k;
  }
  return std::nullopt;
}

std::string_view ProvenanceName(Provenance provenance) {
  return provenance == Provenance::kOriginal ? "original" : "enriched";
}

std::string EntityRef::ToString() const {
  if (!sense) return id;
  return id + "#" + std::to_string(*sense);
}

EntityRef EntityRef::Parse(std::string_view text, int line) {
  EntityRef ref;
  size_t hash = text.find('#');
  ref.id = std::string(text.substr(0, hash));
  if (!ValidId(ref.id)) {
    throw Error(ErrorKind::kParse, "invalid entity id '" + std::string(text) +
                                       "'", line);
  }
  if (hash != std::string_view::npos) {
    auto sense = ParseCount(text.substr(hash + 1), line);
    if (sense == 0) {
      throw Error(ErrorKind::kParse, "sense numbers start at 1", line);
    }
    ref.sense = static_cast<SenseId>(sense);
  }
  return ref;
}

std::string MakeEntityId(std::string_view surface) {
  std::string id = NormalizeTerm(surface);
  for (char &c : id) {
    if (c == ' ' || c == '#' || c == '\t') c = '_';
  }
  return id;
}

Ontology Ontology::Parse(std::string_view text) {
  struct Pending {
    int line;
    std::vector<std::string> fields;
  };
  std::vector<Pending> concepts, instances, axioms;

  int line_no = 0;
  for (const std::string &raw : SplitLines(text)) {
    ++line_no;
    if (Trim(raw).empty() || raw[0] == '#') continue;
    auto fields = SplitTabs(raw);
    const std::string &tag = fields[0];
    if (tag == "C") {
      if (fields.size() != 4 && fields.size() != 5) {
        throw Error(ErrorKind::kParse,
                    "concept record needs 4 or 5 fields", line_no);
      }
      concepts.push_back({line_no, std::move(fields)});
    } else if (tag == "I") {
      if (fields.size() != 4) {
        throw Error(ErrorKind::kParse, "instance record needs 4 fields",
                    line_no);
      }
      instances.push_back({line_no, std::move(fields)});
    } else if (tag == "A") {
      if (fields.size() != 5 && fields.size() != 7) {
        throw Error(ErrorKind::kParse, "axiom record needs 5 or 7 fields",
                    line_no);
      }
      axioms.push_back({line_no, std::move(fields)});
    } else {
      throw Error(ErrorKind::kParse, "unknown record tag '" + tag + "'",
                  line_no);
    }
  }

  // Declarations first so axioms may precede the records they reference.
  Ontology o;
  auto annotate = [](const Error &e, int line) {
    return Error(e.kind(),
                 "line " + std::to_string(line) + ": " + e.what(), line);
  };
  for (auto &[line, f] : concepts) {
    Concept c;
    c.id = f[1];
    c.label = f[2];
    auto senses = ParseCount(f[3], line);
    if (senses == 0) {
      throw Error(ErrorKind::kValidation,
                  "line " + std::to_string(line) + ": concept '" + c.id +
                      "' needs at least one sense", line);
    }
    c.sense_count = static_cast<int>(senses);
    if (f.size() == 5) {
      std::string_view cats = f[4];
      size_t start = 0;
      while (start <= cats.size()) {
        size_t comma = cats.find(',', start);
        if (comma == std::string_view::npos) comma = cats.size();
        auto cat = Trim(cats.substr(start, comma - start));
        if (!cat.empty()) c.categories.insert(std::string(cat));
        start = comma + 1;
      }
    }
    try {
      o.AddConcept(std::move(c));
    } catch (const Error &e) {
      throw annotate(e, line);
    }
  }
  for (auto &[line, f] : instances) {
    try {
      o.AddInstance({f[1], f[2], f[3]});
    } catch (const Error &e) {
      throw annotate(e, line);
    }
  }
  for (auto &[line, f] : axioms) {
    Axiom a;
    auto relation = ParseRelation(f[1]);
    if (!relation) {
      throw Error(ErrorKind::kParse, "unknown relation '" + f[1] + "'", line);
    }
    a.relation = *relation;
    a.subject = EntityRef::Parse(f[2], line);
    a.object = EntityRef::Parse(f[3], line);
    if (f[4] == "original") {
      a.provenance = Provenance::kOriginal;
    } else if (f[4] == "enriched") {
      a.provenance = Provenance::kEnriched;
    } else {
      throw Error(ErrorKind::kParse, "unknown provenance '" + f[4] + "'",
                  line);
    }
    if (f.size() == 7) a.evidence = Evidence{f[5], ParseCount(f[6], line)};
    try {
      if (!o.AddAxiom(std::move(a))) {
        throw Error(ErrorKind::kValidation, "duplicate axiom");
      }
    } catch (const Error &e) {
      throw annotate(e, line);
    }
  }
  return o;
}

Ontology Ontology::Load(const std::filesystem::path &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.what(), e.line());
  }
}

std::string Ontology::Serialize() const {
  std::string out;
  for (const auto &[id, c] : concepts_) {
    out += "C\t" + c.id + "\t" + c.label + "\t" +
           std::to_string(c.sense_count);
    if (!c.categories.empty()) {
      out += "\t" + Join({c.categories.begin(), c.categories.end()}, ",");
    }
    out += "\n";
  }
  for (const auto &[id, i] : instances_) {
    out += "I\t" + i.id + "\t" + i.label + "\t" + i.concept_id + "\n";
  }
  for (const auto &[key, a] : axioms_) {
    out += "A\t";
    out += RelationName(a.relation);
    out += "\t" + a.subject.ToString() + "\t" + a.object.ToString() + "\t";
    out += ProvenanceName(a.provenance);
    if (a.evidence) {
      out += "\t" + a.evidence->pattern + "\t" +
             std::to_string(a.evidence->hits);
    }
    out += "\n";
  }
  return out;
}

void Ontology::Save(const std::filesystem::path &path) const {
  WriteFile(path, Serialize());
}

void Ontology::AddConcept(Concept c) {
  if (!ValidId(c.id)) {
    throw Error(ErrorKind::kValidation,
                "invalid concept id '" + c.id + "'");
  }
  if (HasEntity(c.id)) {
    throw Error(ErrorKind::kValidation,
                "duplicate identifier '" + c.id + "'");
  }
  std::string key = NormalizeTerm(c.label);
  if (key.empty()) {
    throw Error(ErrorKind::kValidation,
                "concept '" + c.id + "' has an empty label");
  }
  if (c.sense_count < 1) {
    throw Error(ErrorKind::kValidation,
                "concept '" + c.id + "' needs at least one sense");
  }
  auto it = labels_.find(key);
  if (it == labels_.end() || it->second.kind == TermMatch::Kind::kInstance ||
      c.id < it->second.id) {
    labels_[key] = {c.id, TermMatch::Kind::kConcept};
  }
  concepts_.emplace(c.id, std::move(c));
}

void Ontology::AddInstance(Instance instance) {
  if (!ValidId(instance.id)) {
    throw Error(ErrorKind::kValidation,
                "invalid instance id '" + instance.id + "'");
  }
  if (HasEntity(instance.id)) {
    throw Error(ErrorKind::kValidation,
                "duplicate identifier '" + instance.id + "'");
  }
  if (!FindConcept(instance.concept_id)) {
    throw Error(ErrorKind::kValidation,
                "instance '" + instance.id + "' references unknown concept '" +
                    instance.concept_id + "'");
  }
  std::string key = NormalizeTerm(instance.label);
  if (key.empty()) {
    throw Error(ErrorKind::kValidation,
                "instance '" + instance.id + "' has an empty label");
  }
  auto it = labels_.find(key);
  if (it == labels_.end() || (it->second.kind == TermMatch::Kind::kInstance &&
                              instance.id < it->second.id)) {
    labels_[key] = {instance.id, TermMatch::Kind::kInstance};
  }
  instances_.emplace(instance.id, std::move(instance));
}

void Ontology::ValidateRef(const EntityRef &ref, bool concept_only) const {
  if (const Concept *c = FindConcept(ref.id)) {
    if (ref.sense && *ref.sense > c->sense_count) {
      throw Error(ErrorKind::kValidation,
                  "concept '" + ref.id + "' has no sense " +
                      std::to_string(*ref.sense));
    }
    return;
  }
  if (!concept_only && FindInstance(ref.id)) {
    if (ref.sense) {
      throw Error(ErrorKind::kValidation,
                  "instance '" + ref.id + "' cannot carry a sense");
    }
    return;
  }
  throw Error(ErrorKind::kValidation,
              "axiom references undeclared " +
                  std::string(concept_only ? "concept" : "entity") + " '" +
                  ref.id + "'");
}

bool Ontology::AddAxiom(Axiom axiom) {
  axiom = CanonicalAxiom(std::move(axiom));
  bool hierarchy = axiom.relation == RelationKind::kHypernymy ||
                   axiom.relation == RelationKind::kMeronymy;
  ValidateRef(axiom.subject, hierarchy);
  ValidateRef(axiom.object, hierarchy);
  if (axiom.relation != RelationKind::kSynonymy &&
      axiom.subject.id == axiom.object.id) {
    throw Error(ErrorKind::kValidation,
                "self-referencing " + std::string(RelationName(axiom.relation)) +
                    " axiom on '" + axiom.subject.id + "'");
  }
  AxiomKey key = AxiomKeyOf(axiom);
  if (HasAxiom(axiom.relation, axiom.subject, axiom.object)) return false;
  if (axiom.relation == RelationKind::kHypernymy) {
    SenseNode parent = NodeOf(axiom.subject);
    SenseNode child = NodeOf(axiom.object);
    if (parent == child || IsAncestor(child, parent)) {
      throw Error(ErrorKind::kValidation,
                  "hypernymy " + axiom.subject.ToString() + " -> " +
                      axiom.object.ToString() + " would create a cycle");
    }
    parents_[child].insert(parent);
  }
  axioms_.emplace(std::move(key), std::move(axiom));
  return true;
}

bool Ontology::HasAxiom(RelationKind relation, const EntityRef &subject,
                        const EntityRef &object) const {
  Axiom probe = CanonicalAxiom({relation, subject, object, Provenance::kOriginal,
                                std::nullopt});
  // "x" and "x#1" name the same sense.
  auto spellings = [](const EntityRef &ref) {
    std::vector<EntityRef> out = {ref};
    if (ref.resolved_sense() == 1) {
      out.push_back(ref.sense ? EntityRef{ref.id, std::nullopt}
                              : EntityRef{ref.id, 1});
    }
    return out;
  };
  for (const EntityRef &s : spellings(probe.subject)) {
    for (const EntityRef &o : spellings(probe.object)) {
      probe.subject = s;
      probe.object = o;
      if (axioms_.count(AxiomKeyOf(probe))) return true;
    }
  }
  return false;
}

const Concept *Ontology::FindConcept(std::string_view id) const {
  auto it = concepts_.find(id);
  return it == concepts_.end() ? nullptr : &it->second;
}

const Instance *Ontology::FindInstance(std::string_view id) const {
  auto it = instances_.find(id);
  return it == instances_.end() ? nullptr : &it->second;
}

bool Ontology::HasEntity(std::string_view id) const {
  return FindConcept(id) || FindInstance(id);
}

std::optional<TermMatch> Ontology::ContainsTerm(std::string_view surface) const {
  std::string key = NormalizeTerm(surface);
  if (key.empty()) return std::nullopt;
  auto it = labels_.find(key);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::vector<SenseNode> Ontology::ParentsOf(const SenseNode &node) const {
  auto it = parents_.find(node);
  if (it == parents_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

bool Ontology::IsAncestor(const SenseNode &candidate,
                          const SenseNode &node) const {
  std::vector<SenseNode> stack{node};
  std::set<SenseNode> seen;
  while (!stack.empty()) {
    SenseNode current = stack.back();
    stack.pop_back();
    for (const SenseNode &p : ParentsOf(current)) {
      if (p == candidate) return true;
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return false;
}

std::vector<SensePath> Ontology::SemanticPathsFrom(
    std::string_view concept_id) const {
  const Concept *c = FindConcept(concept_id);
  if (!c) {
    throw Error(ErrorKind::kLookup,
                "unknown concept '" + std::string(concept_id) + "'");
  }
  std::vector<SensePath> paths;
  for (SenseId s = 1; s <= c->sense_count; ++s) {
    SensePath path{{c->id, s}};
    while (true) {
      auto it = parents_.find(path.back());
      if (it == parents_.end() || it->second.empty()) break;
      path.push_back(*it->second.begin());
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::set<RelationKind> Ontology::relations() const {
  std::set<RelationKind> kinds;
  for (const auto &[key, a] : axioms_) kinds.insert(a.relation);
  return kinds;
}

}  // namespace ontoenrich
