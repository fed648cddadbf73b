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
#include <set>

#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"

namespace ontoenrich {

namespace {

constexpr std::string_view kX = "{X}";
constexpr std::string_view kY = "{Y}";

const std::set<std::string, std::less<>> &NegationWords() {
  static const std::set<std::string, std::less<>> words = {
      "no", "not", "never", "none", "nor", "neither", "cannot", "nobody",
      "nothing"};
  return words;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsArticle(std::string_view word) { return word == "a" || word == "an"; }

// Lower number means preferred on equal counts.
int Specificity(RelationKind kind) {
  switch (kind) {
    case RelationKind::kInstanceOf: return 0;
    case RelationKind::kHyponymy: return 1;
    case RelationKind::kMeronymy: return 2;
    case RelationKind::kSynonymy: return 3;
    default: return 4;
  }
}

// Splits a term into words, rewrites the last one and joins again.
template <typename Fn>
std::string MapLastWord(std::string_view term, Fn fn) {
  auto words = SplitWhitespace(NormalizeTerm(term));
  if (words.empty()) return {};
  words.back() = fn(words.back());
  return Join(words, " ");
}

void FixArticles(std::vector<std::string> *words) {
  for (size_t i = 0; i + 1 < words->size(); ++i) {
    std::string &w = (*words)[i];
    if (!IsArticle(w)) continue;
    const std::string &next = (*words)[i + 1];
    w = (!next.empty() && IsVowel(next[0])) ? "an" : "a";
  }
}

std::vector<std::string> RenderSingular(const std::vector<std::string> &tmpl,
                                        const std::string &x,
                                        const std::string &y) {
  std::vector<std::string> out;
  for (const std::string &token : tmpl) {
    if (token == kX || token == kY) {
      for (auto &w : SplitWhitespace(token == kX ? x : y)) out.push_back(w);
    } else {
      out.push_back(token);
    }
  }
  FixArticles(&out);
  return out;
}

// "{X} is a kind of {Y}" -> "<Xs> are kinds of <Ys>": the copula becomes
// plural, articles go away, and a noun an article introduced before "of"
// takes the plural.
std::vector<std::string> RenderPlural(const std::vector<std::string> &tmpl,
                                      const std::string &x,
                                      const std::string &y,
                                      const Inflector &inflector) {
  std::vector<std::string> out;
  for (size_t i = 0; i < tmpl.size(); ++i) {
    const std::string &token = tmpl[i];
    if (token == kX || token == kY) {
      for (auto &w : SplitWhitespace(token == kX ? x : y)) out.push_back(w);
    } else if (token == "is") {
      out.push_back("are");
    } else if (token == "was") {
      out.push_back("were");
    } else if (IsArticle(token)) {
      bool noun_of = i + 2 < tmpl.size() && tmpl[i + 1] != kX &&
                     tmpl[i + 1] != kY && tmpl[i + 2] == "of";
      if (noun_of) {
        out.push_back(inflector.Pluralize(tmpl[i + 1]));
        ++i;
      }
    } else {
      out.push_back(token);
    }
  }
  return out;
}

}  // namespace

void PatternCatalogue::Add(PatternTemplate pattern) {
  if (pattern.id.empty() || pattern.group.empty()) {
    throw Error(ErrorKind::kValidation, "pattern needs an id and a group");
  }
  for (const PatternTemplate &p : templates_) {
    if (p.id == pattern.id) {
      throw Error(ErrorKind::kValidation,
                  "duplicate pattern id '" + pattern.id + "'");
    }
  }
  if (pattern.relation == RelationKind::kRelatedTo) {
    throw Error(ErrorKind::kValidation,
                "related-to is the fallback, not a pattern relation");
  }
  pattern.text = NormalizeTerm(pattern.text);
  // NormalizeTerm folds case, which would turn {X} into {x}.
  auto words = SplitWhitespace(pattern.text);
  for (std::string &w : words) {
    if (w == "{x}") w = kX;
    if (w == "{y}") w = kY;
  }
  pattern.text = Join(words, " ");
  auto xs = std::count(words.begin(), words.end(), kX);
  auto ys = std::count(words.begin(), words.end(), kY);
  if (xs != 1 || ys != 1) {
    throw Error(ErrorKind::kValidation,
                "pattern '" + pattern.id + "' needs exactly one {X} and one {Y}");
  }
  if (ContainsNegation(pattern.text)) {
    throw Error(ErrorKind::kValidation,
                "pattern '" + pattern.id + "' contains a negation");
  }
  templates_.push_back(std::move(pattern));
}

PatternCatalogue PatternCatalogue::Parse(std::string_view text) {
  PatternCatalogue catalogue;
  int line_no = 0;
  for (const std::string &line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line[0] == '#') continue;
    auto f = SplitTabs(line);
    if (f.size() != 5 || f[0] != "P") {
      throw Error(ErrorKind::kParse,
                  "pattern line " + std::to_string(line_no) +
                      ": expected P<tab>id<tab>relation<tab>group<tab>template",
                  line_no);
    }
    auto relation = ParseRelation(f[2]);
    if (!relation) {
      throw Error(ErrorKind::kParse, "unknown relation '" + f[2] + "'",
                  line_no);
    }
    try {
      catalogue.Add({f[1], *relation, f[3], f[4]});
    } catch (const Error &e) {
      throw Error(e.kind(),
                  "pattern line " + std::to_string(line_no) + ": " + e.what(),
                  line_no);
    }
  }
  return catalogue;
}

PatternCatalogue PatternCatalogue::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

std::string PatternCatalogue::Digest() const {
  std::string canonical;
  for (const PatternTemplate &p : templates_) {
    canonical += "P\t" + p.id + "\t" + std::string(RelationName(p.relation)) +
                 "\t" + p.group + "\t" + p.text + "\n";
  }
  return Sha256Hex(canonical);
}

Inflector Inflector::Parse(std::string_view text) {
  Inflector inflector;
  int line_no = 0;
  for (const std::string &line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line[0] == '#') continue;
    auto f = SplitTabs(line);
    if (f.size() != 2) {
      throw Error(ErrorKind::kParse,
                  "exceptions line " + std::to_string(line_no) +
                      ": expected <singular>\\t<plural>",
                  line_no);
    }
    inflector.AddException(f[0], f[1]);
  }
  return inflector;
}

Inflector Inflector::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

void Inflector::AddException(std::string_view singular,
                             std::string_view plural) {
  std::string s = NormalizeTerm(singular), p = NormalizeTerm(plural);
  plural_of_[s] = p;
  singular_of_[p] = s;
}

std::string Inflector::PluralWord(const std::string &w) const {
  if (auto it = plural_of_.find(w); it != plural_of_.end()) return it->second;
  if (singular_of_.count(w)) return w;
  if (EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
      EndsWith(w, "ch") || EndsWith(w, "sh")) {
    return w + "es";
  }
  if (w.size() >= 2 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  return w + "s";
}

std::string Inflector::SingularWord(const std::string &w) const {
  if (auto it = singular_of_.find(w); it != singular_of_.end()) {
    return it->second;
  }
  if (plural_of_.count(w)) return w;
  if (w.size() > 3 && EndsWith(w, "ies")) {
    return w.substr(0, w.size() - 3) + "y";
  }
  for (std::string_view suffix : {"sses", "xes", "zes", "ches", "shes"}) {
    if (w.size() > suffix.size() && EndsWith(w, suffix)) {
      return w.substr(0, w.size() - 2);
    }
  }
  if (w.size() > 1 && w.back() == 's' && !EndsWith(w, "ss") &&
      !EndsWith(w, "us") && !EndsWith(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

std::string Inflector::Pluralize(std::string_view term) const {
  return MapLastWord(term, [this](const std::string &w) { return PluralWord(w); });
}

std::string Inflector::Singularize(std::string_view term) const {
  return MapLastWord(term,
                     [this](const std::string &w) { return SingularWord(w); });
}

bool ContainsNegation(std::string_view text) {
  for (const std::string &word : SplitWhitespace(NormalizeTerm(text))) {
    if (NegationWords().count(word) || EndsWith(word, "n't")) return true;
  }
  return false;
}

std::vector<PatternQuery> InstantiatePatterns(std::string_view missing_term,
                                              std::string_view ontology_term,
                                              const PatternCatalogue &catalogue,
                                              const Inflector &inflector) {
  std::vector<PatternQuery> out;
  std::string x_singular = inflector.Singularize(missing_term);
  std::string y_singular = inflector.Singularize(ontology_term);
  if (x_singular.empty() || y_singular.empty()) return out;
  std::string x_plural = inflector.Pluralize(x_singular);
  std::string y_plural = inflector.Pluralize(y_singular);

  for (const PatternTemplate &p : catalogue.templates()) {
    auto tmpl = SplitWhitespace(p.text);
    std::set<std::string> seen;
    auto emit = [&](GrammaticalNumber number, std::vector<std::string> words) {
      std::string query = Join(words, " ");
      if (ContainsNegation(query) || !seen.insert(query).second) return;
      out.push_back({p.id, p.group, p.relation, number, std::move(query)});
    };
    emit(GrammaticalNumber::kSingular,
         RenderSingular(tmpl, x_singular, y_singular));
    emit(GrammaticalNumber::kPlural,
         RenderPlural(tmpl, x_plural, y_plural, inflector));
  }
  return out;
}

RelationSuggestion ExtractRelation(std::string_view missing_term,
                                   std::string_view ontology_term,
                                   const HitCountProvider &provider,
                                   const PatternCatalogue &catalogue,
                                   const Inflector &inflector) {
  RelationSuggestion s;
  s.missing_term = NormalizeTerm(missing_term);
  s.target_term = NormalizeTerm(ontology_term);

  std::map<std::string, RelationKind> group_relation;
  for (PatternQuery &q : InstantiatePatterns(s.missing_term, s.target_term,
                                             catalogue, inflector)) {
    HitCount hits = provider.PatternHits(q.query);
    s.group_hits[q.group] += hits;
    group_relation.emplace(q.group, q.relation);
    s.audit.push_back({std::move(q), hits});
  }

  const std::string *best = nullptr;
  int ties = 0;
  for (const auto &[group, hits] : s.group_hits) {
    if (hits == 0) continue;
    if (!best) {
      best = &group;
      ties = 1;
      continue;
    }
    HitCount best_hits = s.group_hits.at(*best);
    if (hits > best_hits) {
      best = &group;
      ties = 1;
    } else if (hits == best_hits) {
      ++ties;
      if (Specificity(group_relation.at(group)) <
          Specificity(group_relation.at(*best))) {
        best = &group;
      }
    }
  }
  if (!best) return s;   // related-to fallback

  s.relation = group_relation.at(*best);
  s.winner_group = *best;
  s.winner_hits = s.group_hits.at(*best);
  s.tie = ties > 1;
  const PatternCount *top = nullptr;
  for (const PatternCount &pc : s.audit) {
    if (pc.query.group == *best && (!top || pc.hits > top->hits)) top = &pc;
  }
  s.winner_pattern = top->query.pattern_id;
  return s;
}

std::string AuditToTsv(const std::vector<RelationSuggestion> &suggestions) {
  std::string out;
  for (const RelationSuggestion &s : suggestions) {
    for (const PatternCount &pc : s.audit) {
      out += s.missing_term + "\t" + s.target_term + "\t" +
             pc.query.pattern_id + "\t" + pc.query.group + "\t" +
             std::string(RelationName(pc.query.relation)) + "\t" +
             (pc.query.number == GrammaticalNumber::kSingular ? "singular"
                                                              : "plural") +
             "\t" + pc.query.query + "\t" + std::to_string(pc.hits) + "\n";
    }
  }
  return out;
}

EnrichmentAxiomSet BuildAxioms(
    const std::vector<RelationSuggestion> &suggestions) {
  std::map<AxiomKey, EnrichedAxiom> unique;
  for (const RelationSuggestion &s : suggestions) {
    std::string missing_id = s.missing_id.value_or(MakeEntityId(s.missing_term));
    std::string target_id = s.target_id.value_or(MakeEntityId(s.target_term));
    std::optional<Evidence> evidence;
    if (s.winner_pattern) evidence = Evidence{*s.winner_pattern, s.winner_hits};

    std::vector<std::optional<SenseId>> senses;
    for (SenseId sense : s.senses) senses.emplace_back(sense);
    if (senses.empty()) senses.emplace_back(std::nullopt);

    for (const auto &sense : senses) {
      Axiom axiom{s.relation, EntityRef{missing_id, std::nullopt},
                  EntityRef{target_id, sense}, Provenance::kEnriched,
                  evidence};
      axiom = CanonicalAxiom(std::move(axiom));
      AxiomKey key = AxiomKeyOf(axiom);
      unique.emplace(std::move(key),
                     EnrichedAxiom{std::move(axiom), s.missing_term, missing_id,
                                   s.relation == RelationKind::kInstanceOf});
    }
  }
  EnrichmentAxiomSet set;
  for (auto &[key, axiom] : unique) set.axioms.push_back(std::move(axiom));
  return set;
}

}  // namespace ontoenrich
