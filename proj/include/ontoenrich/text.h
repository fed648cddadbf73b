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

#ifndef ONTOENRICH_TEXT_H_
#define ONTOENRICH_TEXT_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoenrich/ontology.h"

namespace ontoenrich {

struct Document {
  std::string id;      // "<domain>/<file name>"
  std::string domain;
  std::string text;
};

class Corpus {
 public:
  // Throws Error(kValidation) on a duplicate id or blank text.
  void Add(Document doc);

  // One subdirectory per domain label, one text file per article. Files are
  // visited in lexicographic path order. Files placed directly in the root
  // get the domain "default".
  static Corpus LoadDirectory(const std::filesystem::path &root);

  const std::vector<Document> &documents() const { return documents_; }
  size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

 private:
  std::vector<Document> documents_;
  std::set<std::string> ids_;
};

class StopList {
 public:
  StopList() = default;
  explicit StopList(std::set<std::string> entries);

  // One entry per line. Entries are normalized like terms.
  static StopList Parse(std::string_view text);
  static StopList Load(const std::filesystem::path &path);

  bool Contains(std::string_view normalized_token) const {
    return entries_.count(std::string(normalized_token)) > 0;
  }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

 private:
  std::set<std::string> entries_;
};

// A run of adjacent tokens not interrupted by punctuation or a stopword.
using TokenSpan = std::vector<std::string>;

// Word segmentation shared by the tokenizer and the phrase index. Tokens are
// normalized; letters, digits, '-', '\'' and non-ASCII bytes form words,
// whitespace separates tokens, and every other character closes the current
// segment. Leading and trailing '-'/'\'' are trimmed from a word.
std::vector<TokenSpan> SplitSegments(std::string_view text);

// Segments the text and removes stoplist members, splitting a segment
// wherever a stopword was removed. Throws Error(kDomain) on an empty list.
std::vector<TokenSpan> StripStopwords(std::string_view text,
                                      const StopList &stoplist);

std::vector<std::string> Flatten(const std::vector<TokenSpan> &spans);

struct NGram {
  std::vector<std::string> tokens;
  std::string surface;                // tokens joined by one space
  std::set<std::string> documents;    // source document ids

  bool operator==(const NGram &) const = default;
};

// N-grams keyed by surface, so iteration order is lexicographic.
using NGramSet = std::map<std::string, NGram, std::less<>>;

inline constexpr size_t kMaxNGramLength = 3;

// Adds every contiguous 1..3-gram inside each span, merging duplicates and
// recording `doc_id` as a source when non-empty.
void AddNGrams(const std::vector<TokenSpan> &spans, std::string_view doc_id,
               NGramSet *out);
NGramSet TokenizeNGrams(const std::vector<TokenSpan> &spans,
                        std::string_view doc_id = {});

// Surface -> entity kind lookup standing in for a named entity recognizer.
class Gazetteer {
 public:
  // Tab-separated "<surface>\t<kind>" lines; '#' starts a comment line.
  static Gazetteer Parse(std::string_view text);
  static Gazetteer Load(const std::filesystem::path &path);

  void Add(std::string_view surface, std::string kind);
  std::optional<std::string> Lookup(std::string_view surface) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

struct KnownTerm {
  NGram ngram;
  std::optional<TermMatch> match;      // set when the ontology defines it
  std::optional<std::string> entity;   // gazetteer kind, when listed
};

struct TermPartition {
  std::vector<KnownTerm> known;    // lexicographic by surface
  std::vector<NGram> missing;      // lexicographic by surface
};

// An n-gram is known when the gazetteer lists it or the ontology contains
// it as a concept or instance label; all others are missing.
TermPartition PartitionTerms(const NGramSet &ngrams, const Ontology &ontology,
                             const Gazetteer &gazetteer);

// Lexicon categories of a term the ontology defines; empty for instances.
// Throws Error(kDomain) for a term the ontology does not contain.
std::set<std::string> PosTag(const NGram &term, const Ontology &ontology);

}  // namespace ontoenrich

#endif  // ONTOENRICH_TEXT_H_
