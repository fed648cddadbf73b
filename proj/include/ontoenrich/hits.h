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

#ifndef ONTOENRICH_HITS_H_
#define ONTOENRICH_HITS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ontoenrich/text.h"

namespace ontoenrich {

using HitCount = unsigned long long;

// Source of document frequencies: hits(x) is the number of documents that
// contain x as an exact phrase, pair_hits(a, b) the number containing both,
// total_docs() the collection size. Implementations are read-only after
// construction and may be queried concurrently.
//
// Contract: pair_hits(a, b) == pair_hits(b, a) <= min(hits(a), hits(b)) and
// 0 <= hits(x) <= total_docs().
class HitCountProvider {
 public:
  virtual ~HitCountProvider() = default;

  virtual HitCount Hits(std::string_view phrase) const = 0;
  virtual HitCount PairHits(std::string_view a, std::string_view b) const = 0;
  virtual HitCount TotalDocs() const = 0;

  // Count for a fully instantiated pattern query.
  virtual HitCount PatternHits(std::string_view query) const {
    return Hits(query);
  }

  // Short description recorded in run manifests.
  virtual std::string Identity() const = 0;
};

// Exact-phrase document index over a local corpus.
//
// Phrases of up to max_phrase_len tokens are answered from posting lists.
// Longer phrases (pattern queries) are answered by intersecting the posting
// lists of their windows and verifying candidates against the stored token
// segments. A phrase never matches across punctuation.
class CorpusIndex : public HitCountProvider {
 public:
  // Throws Error(kDomain) for an empty corpus or max_phrase_len < 3.
  static CorpusIndex Build(const Corpus &corpus, size_t max_phrase_len = 3);

  static CorpusIndex Parse(std::string_view text);
  static CorpusIndex Load(const std::filesystem::path &path);

  // Deterministic artifact: header, documents with their token segments,
  // then posting lists sorted by phrase.
  std::string Serialize() const;

  HitCount Hits(std::string_view phrase) const override;
  HitCount PairHits(std::string_view a, std::string_view b) const override;
  HitCount TotalDocs() const override { return doc_ids_.size(); }
  std::string Identity() const override;

  // Sorted ordinals of the documents containing the phrase.
  std::vector<uint32_t> Documents(std::string_view phrase) const;

  const std::vector<std::string> &document_ids() const { return doc_ids_; }
  size_t max_phrase_len() const { return max_phrase_len_; }
  size_t phrase_count() const { return postings_.size(); }

 private:
  CorpusIndex() = default;
  std::vector<uint32_t> Lookup(const std::vector<std::string> &tokens) const;
  bool Contains(uint32_t doc, const std::vector<std::string> &tokens) const;

  size_t max_phrase_len_ = 3;
  std::vector<std::string> doc_ids_;
  std::vector<std::vector<TokenSpan>> segments_;
  std::unordered_map<std::string, std::vector<uint32_t>> postings_;
};

// Replayable hit counts recorded from a search engine.
//
// File format: a header "N\t<total_docs>", then "H\t<query>\t<count>" lines.
// A query of the form "\"a\" \"b\"" (two quoted terms) records the
// co-occurrence count of a and b; any other query records an exact-phrase
// count. Keys are normalized like terms, and absent keys count 0.
class SnapshotTable : public HitCountProvider {
 public:
  // Throws Error(kParse) on malformed lines or duplicate keys, and
  // Error(kValidation) when a count exceeds N or a pair count exceeds either
  // single-term count.
  static SnapshotTable Parse(std::string_view text);
  static SnapshotTable Load(const std::filesystem::path &path);

  HitCount Hits(std::string_view phrase) const override;
  HitCount PairHits(std::string_view a, std::string_view b) const override;
  HitCount TotalDocs() const override { return total_docs_; }
  std::string Identity() const override;

  size_t size() const { return phrases_.size() + pairs_.size(); }

 private:
  SnapshotTable() = default;

  HitCount total_docs_ = 0;
  std::string digest_;
  std::map<std::string, HitCount, std::less<>> phrases_;
  std::map<std::pair<std::string, std::string>, HitCount> pairs_;
};

}  // namespace ontoenrich

#endif  // ONTOENRICH_HITS_H_
