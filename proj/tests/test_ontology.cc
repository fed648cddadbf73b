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

#include <functional>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "ontoenrich/error.h"
#include "test_util.h"

namespace ontoenrich {
namespace {

using testing::Fixture;

ErrorKind KindOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kConfig;
}

Ontology Small() {
  return Ontology::Parse(
      "C\torganization\torganization\t7\n"
      "C\tconcept\tconcept\t1\n"
      "C\tgroup\tgroup\t1\n"
      "I\tacme\tAcme\tgroup\n"
      "A\thypernymy\tgroup\torganization#1\toriginal\n");
}

TEST_CASE("load counts concepts and senses") {
  Ontology o = Ontology::Parse(
      "# two concepts\n"
      "C\torganization\torganization\t7\n"
      "C\tconcept\tconcept\t1\n");
  CHECK(o.concepts().size() == 2);
  CHECK(o.FindConcept("organization")->sense_count == 7);
  CHECK(o.instances().empty());
  CHECK(o.axioms().empty());
}

TEST_CASE("empty file gives an empty ontology") {
  Ontology o = Ontology::Parse("");
  CHECK(o.empty());
  CHECK(o.relations().empty());
  CHECK(o.Serialize().empty());
}

TEST_CASE("load errors") {
  CHECK(KindOf([] {
          Ontology::Parse("C\ta\ta\t1\nA\thypernymy\ta\tghost\toriginal\n");
        }) == ErrorKind::kValidation);
  try {
    Ontology::Parse("C\ta\ta\t1\nC\tb\tb\n");
    FAIL("expected a parse error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kParse);
    CHECK(e.line() == 2);
  }
  CHECK(KindOf([] { Ontology::Parse("C\ta\ta\tmany\n"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { Ontology::Parse("X\ta\n"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { Ontology::Parse("C\ta\ta\t1\nC\ta\tb\t1\n"); }) ==
        ErrorKind::kValidation);
  CHECK(KindOf([] {
          Ontology::Parse("C\ta\ta\t1\nA\tfriendship\ta\ta\toriginal\n");
        }) == ErrorKind::kParse);
  // Sense out of range.
  CHECK(KindOf([] {
          Ontology::Parse(
              "C\ta\ta\t2\nC\tb\tb\t1\nA\thypernymy\ta#3\tb\toriginal\n");
        }) == ErrorKind::kValidation);
  // Duplicate axiom lines.
  CHECK(KindOf([] {
          Ontology::Parse(
              "C\ta\ta\t1\nC\tb\tb\t1\n"
              "A\thypernymy\ta\tb\toriginal\nA\thypernymy\ta\tb\toriginal\n");
        }) == ErrorKind::kValidation);
  CHECK(KindOf([] { Ontology::Load("/nonexistent/ontology.tsv"); }) ==
        ErrorKind::kIo);
}

TEST_CASE("contains_term on the Java fixture") {
  Ontology o = Ontology::Load(Fixture("java/ontology.tsv"));
  auto java = o.ContainsTerm("Java");
  REQUIRE(java);
  CHECK(java->id == "java");
  CHECK(java->kind == TermMatch::Kind::kConcept);
  CHECK_FALSE(o.ContainsTerm("jawa"));
  CHECK_FALSE(o.ContainsTerm(""));
  CHECK_FALSE(o.ContainsTerm("   "));
  CHECK(o.ContainsTerm("  dutch   EAST\tindies")->id == "dutch_east_indies");
  CHECK(o.ContainsTerm("capital city")->id == "capital_city");
}

TEST_CASE("contains_term reports instances and prefers concepts") {
  Ontology o = Small();
  auto acme = o.ContainsTerm("ACME");
  REQUIRE(acme);
  CHECK(acme->kind == TermMatch::Kind::kInstance);
  o.AddConcept({"acme_corp", "acme", 1, {}});
  CHECK(o.ContainsTerm("acme")->kind == TermMatch::Kind::kConcept);
}

TEST_CASE("semantic paths") {
  Ontology o = Ontology::Load(Fixture("organization/ontology.tsv"));
  auto paths = o.SemanticPathsFrom("organization");
  REQUIRE(paths.size() == 7);
  for (size_t i = 0; i < paths.size(); ++i) {
    CHECK(paths[i].front() == SenseNode{"organization", static_cast<int>(i + 1)});
    // Every path ends at a root and consecutive nodes are hypernymy edges.
    const SenseNode &root = paths[i].back();
    for (const auto &[key, axiom] : o.axioms()) {
      if (axiom.relation == RelationKind::kHypernymy) {
        CHECK_FALSE((axiom.object.id == root.concept_id &&
                     axiom.object.resolved_sense() == root.sense));
      }
    }
    for (size_t j = 0; j + 1 < paths[i].size(); ++j) {
      CHECK(o.HasAxiom(RelationKind::kHypernymy,
                       {paths[i][j + 1].concept_id, paths[i][j + 1].sense},
                       {paths[i][j].concept_id, paths[i][j].sense}));
    }
  }
  CHECK(paths[0].size() == 5);
  CHECK(paths[0][1].concept_id == "social_group");
  CHECK(paths[0][4].concept_id == "entity");

  auto single = o.SemanticPathsFrom("concept");
  CHECK(single.size() == 1);
  auto root = o.SemanticPathsFrom("entity");
  REQUIRE(root.size() == 1);
  CHECK(root[0].size() == 1);
  CHECK(KindOf([&] { o.SemanticPathsFrom("nothing"); }) == ErrorKind::kLookup);
}

TEST_CASE("add_axiom is idempotent and canonicalizes direction") {
  Ontology o = Ontology::Load(Fixture("java/ontology.tsv"));
  o.AddConcept({"jawa", "jawa", 1, {}});
  size_t before = o.axioms().size();
  Axiom related{RelationKind::kRelatedTo, {"jawa", {}}, {"java", {}},
                Provenance::kEnriched, std::nullopt};
  CHECK(o.AddAxiom(related));
  CHECK_FALSE(o.AddAxiom(related));
  CHECK(o.axioms().size() == before + 1);

  Ontology org = Ontology::Load(Fixture("organization/ontology.tsv"));
  org.AddConcept({"corporate_body", "corporate body", 1, {}});
  Axiom hyponym{RelationKind::kHyponymy, {"corporate_body", {}},
                {"organization", 1}, Provenance::kEnriched,
                Evidence{"is-a", 80700}};
  CHECK(org.AddAxiom(hyponym));
  CHECK(org.HasAxiom(RelationKind::kHyponymy, {"corporate_body", {}},
                     {"organization", 1}));
  CHECK(org.HasAxiom(RelationKind::kHypernymy, {"organization", 1},
                     {"corporate_body", {}}));
  AxiomKey key{"hypernymy", "organization#1", "corporate_body"};
  REQUIRE(org.axioms().count(key));
  CHECK(org.axioms().at(key).provenance == Provenance::kEnriched);
  CHECK(org.axioms().at(key).evidence->hits == 80700);
  // The mirrored form is the same axiom.
  Axiom mirrored = hyponym;
  mirrored.relation = RelationKind::kHypernymy;
  std::swap(mirrored.subject, mirrored.object);
  CHECK_FALSE(org.AddAxiom(mirrored));
}

TEST_CASE("add_axiom rejects bad references") {
  Ontology o = Small();
  auto add = [&](RelationKind r, EntityRef s, EntityRef t) {
    return [&o, r, s, t] {
      o.AddAxiom({r, s, t, Provenance::kEnriched, std::nullopt});
    };
  };
  CHECK(KindOf(add(RelationKind::kRelatedTo, {"ghost", {}}, {"group", {}})) ==
        ErrorKind::kValidation);
  CHECK(KindOf(add(RelationKind::kHypernymy, {"group", {}}, {"group", {}})) ==
        ErrorKind::kValidation);
  // Cycle: organization#1 is already below group.
  CHECK(KindOf(add(RelationKind::kHypernymy, {"organization", 1},
                   {"group", {}})) == ErrorKind::kValidation);
  // Hierarchy edges need concepts at both ends.
  CHECK(KindOf(add(RelationKind::kHypernymy, {"group", {}}, {"acme", {}})) ==
        ErrorKind::kValidation);
  CHECK(KindOf(add(RelationKind::kRelatedTo, {"acme", 2}, {"group", {}})) ==
        ErrorKind::kValidation);
  // Synonymy may relate a concept to itself.
  CHECK(o.AddAxiom({RelationKind::kSynonymy, {"group", {}}, {"group", {}},
                    Provenance::kEnriched, std::nullopt}));
  CHECK(o.AddAxiom({RelationKind::kInstanceOf, {"acme", {}}, {"group", {}},
                    Provenance::kOriginal, std::nullopt}));
}

TEST_CASE("serialization round trip") {
  for (const char *name : {"java/ontology.tsv", "organization/ontology.tsv"}) {
    Ontology o = Ontology::Load(Fixture(name));
    std::string canonical = o.Serialize();
    Ontology again = Ontology::Parse(canonical);
    CHECK(again == o);
    CHECK(again.Serialize() == canonical);
  }
  Ontology small = Small();
  small.AddAxiom({RelationKind::kRelatedTo, {"acme", {}}, {"concept", {}},
                  Provenance::kEnriched, Evidence{"p", 3}});
  CHECK(Ontology::Parse(small.Serialize()) == small);
  CHECK(small.relations() ==
        std::set<RelationKind>{RelationKind::kHypernymy,
                               RelationKind::kRelatedTo});
}

TEST_CASE("entity refs and ids") {
  CHECK(EntityRef::Parse("organization#3") == EntityRef{"organization", 3});
  CHECK(EntityRef::Parse("java").ToString() == "java");
  CHECK(EntityRef{"java", 2}.ToString() == "java#2");
  CHECK(MakeEntityId("  Corporate   Body ") == "corporate_body");
  for (auto r : {RelationKind::kSynonymy, RelationKind::kHypernymy,
                 RelationKind::kHyponymy, RelationKind::kMeronymy,
                 RelationKind::kHolonymy, RelationKind::kInstanceOf,
                 RelationKind::kRelatedTo}) {
    CHECK(ParseRelation(RelationName(r)) == r);
  }
  CHECK(RelationName(RelationKind::kInstanceOf) == "instance-of");
  CHECK_FALSE(ParseRelation("is-a"));
}

TEST_CASE("random hierarchies stay acyclic and paths terminate") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    Ontology o;
    int n = 2 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) {
      o.AddConcept({"c" + std::to_string(i), "c" + std::to_string(i),
                    1 + static_cast<int>(rng() % 3), {}});
    }
    for (int e = 0; e < 3 * n; ++e) {
      std::string a = "c" + std::to_string(rng() % n);
      std::string b = "c" + std::to_string(rng() % n);
      EntityRef parent{a, 1 + static_cast<int>(rng() %
                                                o.FindConcept(a)->sense_count)};
      EntityRef child{b, 1 + static_cast<int>(rng() %
                                               o.FindConcept(b)->sense_count)};
      Axiom ax{RelationKind::kHypernymy, parent, child, Provenance::kOriginal,
               std::nullopt};
      try {
        o.AddAxiom(ax);
      } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::kValidation);
        continue;
      }
      Ontology once = o;
      o.AddAxiom(ax);
      CHECK(o == once);
    }
    for (const auto &[id, c] : o.concepts()) {
      auto paths = o.SemanticPathsFrom(id);
      CHECK(paths.size() == static_cast<size_t>(c.sense_count));
      for (const SensePath &p : paths) {
        CHECK(p.size() <= static_cast<size_t>(3 * n));
        std::set<SenseNode> seen(p.begin(), p.end());
        CHECK(seen.size() == p.size());
      }
    }
    CHECK(Ontology::Parse(o.Serialize()) == o);
  }
}

}  // namespace
}  // namespace ontoenrich
