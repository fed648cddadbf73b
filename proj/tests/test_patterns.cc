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


#include "ontoenrich/patterns.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ontoenrich/error.h"
#include "ontoenrich/pipeline.h"
#include "test_util.h"

namespace ontoenrich {
namespace {

using testing::Fixture;

// Answers pattern queries from a map; everything else is zero.
class MapProvider : public HitCountProvider {
 public:
  explicit MapProvider(std::map<std::string, HitCount> counts)
      : counts_(std::move(counts)) {}

  HitCount Hits(std::string_view phrase) const override {
    issued_.emplace_back(phrase);
    auto it = counts_.find(std::string(phrase));
    return it == counts_.end() ? 0 : it->second;
  }
  HitCount PairHits(std::string_view, std::string_view) const override {
    return 0;
  }
  HitCount TotalDocs() const override { return 1000000; }
  std::string Identity() const override { return "map"; }

  const std::vector<std::string> &issued() const { return issued_; }

 private:
  std::map<std::string, HitCount> counts_;
  mutable std::vector<std::string> issued_;
};

PatternCatalogue Bundled() {
  return PatternCatalogue::Load(DefaultPatternsPath());
}

std::set<std::string> Queries(const std::vector<PatternQuery> &qs) {
  std::set<std::string> out;
  for (const auto &q : qs) out.insert(q.query);
  return out;
}

TEST_CASE("corporate body queries") {
  auto qs = Queries(InstantiatePatterns("corporate body", "organization",
                                        Bundled()));
  CHECK(qs.count("corporate body is an organization"));
  CHECK(qs.count("corporate body is a kind of organization"));
  CHECK(qs.count("corporate body is a part of an organization"));
  CHECK(qs.count("corporate body is an instance of an organization"));
  CHECK(qs.count("corporate body is similar to an organization"));
  CHECK(qs.count("corporate body is the same as an organization"));
  CHECK(qs.count("corporate bodies are organizations"));
  CHECK(InstantiatePatterns("corporate body", "organization", {}).empty());
}

TEST_CASE("instantiation details") {
  PatternCatalogue c;
  c.Add({"is-a", RelationKind::kHyponymy, "is-a", "{X} is a {Y}"});
  auto qs = InstantiatePatterns("okapi", "mammal", c);
  REQUIRE(qs.size() == 2);
  CHECK(qs[0].query == "okapi is a mammal");
  CHECK(qs[0].number == GrammaticalNumber::kSingular);
  CHECK(qs[1].query == "okapis are mammals");
  CHECK(qs[1].number == GrammaticalNumber::kPlural);
  CHECK(InstantiatePatterns("okapi", "animal", c)[0].query ==
        "okapi is an animal");

  Inflector inf = Inflector::Load(
      std::filesystem::path(ONTOENRICH_DATA_DIR) / "plurals.tsv");
  auto people = InstantiatePatterns("child", "person", c, inf);
  CHECK(people[1].query == "children are people");
  CHECK(InstantiatePatterns("children", "people", c, inf)[0].query ==
        "child is a person");
}

TEST_CASE("inflector rules") {
  Inflector inf;
  CHECK(inf.Pluralize("box") == "boxes");
  CHECK(inf.Pluralize("church") == "churches");
  CHECK(inf.Pluralize("city") == "cities");
  CHECK(inf.Pluralize("day") == "days");
  CHECK(inf.Pluralize("capital city") == "capital cities");
  CHECK(inf.Singularize("cities") == "city");
  CHECK(inf.Singularize("boxes") == "box");
  CHECK(inf.Singularize("organizations") == "organization");
  inf.AddException("mouse", "mice");
  CHECK(inf.Pluralize("field mouse") == "field mice");
  CHECK(inf.Singularize("mice") == "mouse");
}

TEST_CASE("negation is never produced") {
  CHECK(ContainsNegation("no okapi is a horse"));
  CHECK(ContainsNegation("an okapi isn't a horse"));
  CHECK(ContainsNegation("Never a horse"));
  CHECK_FALSE(ContainsNegation("an okapi is a mammal"));
  CHECK_FALSE(ContainsNegation("notable okapi"));

  PatternCatalogue c;
  CHECK_THROWS_AS(
      c.Add({"neg", RelationKind::kHyponymy, "is-a", "no {X} is a {Y}"}),
      Error);
  c.Add({"is-a", RelationKind::kHyponymy, "is-a", "{X} is a {Y}"});
  // The term itself carries a negation word.
  CHECK(InstantiatePatterns("no man", "island", c).empty());

  MapProvider p({});
  for (const auto &[a, b] : std::vector<std::pair<std::string, std::string>>{
           {"jawa", "java"}, {"okapi", "mammal"}, {"never land", "place"}}) {
    ExtractRelation(a, b, p, Bundled());
  }
  for (const auto &q : p.issued()) CHECK_FALSE(ContainsNegation(q));
}

TEST_CASE("catalogue validation") {
  PatternCatalogue c;
  CHECK_THROWS_AS(c.Add({"a", RelationKind::kHyponymy, "g", "{X} is"}), Error);
  CHECK_THROWS_AS(
      c.Add({"a", RelationKind::kHyponymy, "g", "{X} {X} is {Y}"}), Error);
  CHECK_THROWS_AS(
      c.Add({"a", RelationKind::kRelatedTo, "g", "{X} is {Y}"}), Error);
  c.Add({"a", RelationKind::kHyponymy, "g", "{X} is a {Y}"});
  CHECK_THROWS_AS(c.Add({"a", RelationKind::kHyponymy, "g", "{X} is {Y}"}),
                  Error);
  try {
    PatternCatalogue::Parse("P\tx\tis-a-ish\tg\t{X} is a {Y}\n");
    FAIL("expected a parse error");
  } catch (const Error &e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(PatternCatalogue::Parse("P\tx\thyponymy\n"), Error);
  CHECK(Bundled().templates().size() == 10);
  CHECK(Bundled().Digest() == Bundled().Digest());
  CHECK(Bundled().Digest().size() == 64);
}

TEST_CASE("corporate body arbitration") {
  SnapshotTable s = SnapshotTable::Load(Fixture("organization/snapshot.tsv"));
  auto r = ExtractRelation("corporate body", "organization", s, Bundled());
  CHECK(r.relation == RelationKind::kHyponymy);
  CHECK(r.winner_group == "is-a");
  CHECK(r.winner_pattern == "is-a");
  CHECK(r.winner_hits == 80700);
  CHECK_FALSE(r.tie);
  CHECK(r.group_hits.at("instance") == 0);
  CHECK(r.group_hits.at("part-of") == 0);
  CHECK(r.group_hits.at("same-as") == 0);
}

TEST_CASE("related-to fallback") {
  SnapshotTable s = SnapshotTable::Load(Fixture("java/snapshot.tsv"));
  for (const auto &[a, b] : std::vector<std::pair<std::string, std::string>>{
           {"Hindu-Buddhist", "Indonesia"}, {"jawa", "Java"}}) {
    auto r = ExtractRelation(a, b, s, Bundled());
    CHECK(r.relation == RelationKind::kRelatedTo);
    CHECK_FALSE(r.winner_group);
    CHECK_FALSE(r.winner_pattern);
    CHECK(r.winner_hits == 0);
    CHECK_FALSE(r.audit.empty());
  }
}

TEST_CASE("variants are summed per group") {
  MapProvider p({{"okapi is a mammal", 30},
                 {"okapi is a kind of mammal", 30},
                 {"okapi is part of mammal", 50}});
  auto r = ExtractRelation("okapi", "mammal", p, Bundled());
  CHECK(r.relation == RelationKind::kHyponymy);
  CHECK(r.winner_hits == 60);
  CHECK(r.group_hits.at("part-of") == 50);
}

TEST_CASE("ties prefer the more specific relation") {
  MapProvider p({{"okapi is an instance of mammal", 5},
                 {"okapi is a mammal", 5},
                 {"okapi is part of mammal", 5},
                 {"okapi is the same as a mammal", 5}});
  auto r = ExtractRelation("okapi", "mammal", p, Bundled());
  CHECK(r.relation == RelationKind::kInstanceOf);
  CHECK(r.tie);

  MapProvider q({{"okapi is part of mammal", 7},
                 {"okapi is the same as a mammal", 7}});
  auto m = ExtractRelation("okapi", "mammal", q, Bundled());
  CHECK(m.relation == RelationKind::kMeronymy);
  CHECK(m.tie);
}

int Rank(RelationKind r) {
  switch (r) {
    case RelationKind::kInstanceOf: return 0;
    case RelationKind::kHyponymy: return 1;
    case RelationKind::kMeronymy: return 2;
    case RelationKind::kSynonymy: return 3;
    default: return 4;
  }
}

TEST_CASE("arbitration agrees with the audit trail") {
  std::mt19937 rng(11);
  PatternCatalogue cat = Bundled();
  for (int round = 0; round < 2000; ++round) {
    std::map<std::string, HitCount> counts;
    for (const auto &q : InstantiatePatterns("quokka", "marsupial", cat)) {
      if (rng() % 3 == 0) counts[q.query] = rng() % 4;
    }
    MapProvider p(counts);
    auto r = ExtractRelation("quokka", "marsupial", p, cat);

    std::map<std::string, HitCount> sums;
    std::map<std::string, RelationKind> rel;
    for (const auto &pc : r.audit) {
      sums[pc.query.group] += pc.hits;
      rel[pc.query.group] = pc.query.relation;
    }
    CHECK(sums == r.group_hits);
    HitCount best = 0;
    for (const auto &[g, n] : sums) best = std::max(best, n);
    if (best == 0) {
      CHECK(r.relation == RelationKind::kRelatedTo);
      CHECK_FALSE(r.winner_group);
      continue;
    }
    std::vector<std::string> top;
    for (const auto &[g, n] : sums) {
      if (n == best) top.push_back(g);
    }
    std::sort(top.begin(), top.end(), [&](const auto &a, const auto &b) {
      return std::make_pair(Rank(rel[a]), a) < std::make_pair(Rank(rel[b]), b);
    });
    REQUIRE(r.winner_group);
    CHECK(*r.winner_group == top[0]);
    CHECK(r.winner_hits == best);
    CHECK(r.tie == (top.size() > 1));
  }
}

TEST_CASE("audit export") {
  PatternCatalogue c;
  c.Add({"is-a", RelationKind::kHyponymy, "is-a", "{X} is a {Y}"});
  MapProvider p({{"okapi is a mammal", 3}});
  auto r = ExtractRelation("Okapi", "Mammal", p, c);
  CHECK(AuditToTsv({r}) ==
        "okapi\tmammal\tis-a\tis-a\thyponymy\tsingular\tokapi is a mammal\t3\n"
        "okapi\tmammal\tis-a\tis-a\thyponymy\tplural\tokapis are mammals\t0\n");
}

TEST_CASE("build axioms") {
  CHECK(BuildAxioms({}).axioms.empty());

  RelationSuggestion s;
  s.missing_term = "corporate body";
  s.target_term = "organization";
  s.relation = RelationKind::kHyponymy;
  s.winner_pattern = "is-a";
  s.winner_hits = 80700;
  auto set = BuildAxioms({s, s});
  REQUIRE(set.axioms.size() == 1);
  const Axiom &a = set.axioms[0].axiom;
  // Stored as hypernymy(organization, corporate_body).
  CHECK(a.relation == RelationKind::kHypernymy);
  CHECK(a.subject.id == "organization");
  CHECK(a.object.id == "corporate_body");
  CHECK(a.provenance == Provenance::kEnriched);
  REQUIRE(a.evidence);
  CHECK(a.evidence->hits == 80700);
  CHECK_FALSE(set.axioms[0].as_instance);

  s.senses = {1, 2};
  CHECK(BuildAxioms({s}).axioms.size() == 2);

  RelationSuggestion inst;
  inst.missing_term = "sorbonne";
  inst.target_term = "university";
  inst.relation = RelationKind::kInstanceOf;
  auto is = BuildAxioms({inst});
  REQUIRE(is.axioms.size() == 1);
  CHECK(is.axioms[0].as_instance);

  RelationSuggestion rel;
  rel.missing_term = "jawa";
  rel.target_term = "java";
  auto rs = BuildAxioms({rel});
  CHECK(rs.axioms[0].axiom.relation == RelationKind::kRelatedTo);
  CHECK_FALSE(rs.axioms[0].axiom.evidence);
}

}  // namespace
}  // namespace ontoenrich
