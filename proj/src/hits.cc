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

#include "ontoenrich/hits.h"

#include <algorithm>
#include <optional>

#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"

namespace ontoenrich {

namespace {

std::vector<std::string> QueryTokens(std::string_view phrase) {
  return Flatten(SplitSegments(phrase));
}

std::vector<uint32_t> Intersect(const std::vector<uint32_t> &a,
                                const std::vector<uint32_t> &b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

size_t IntersectionSize(const std::vector<uint32_t> &a,
                        const std::vector<uint32_t> &b) {
  size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Splits "\"a\" \"b\"" into its two terms.
std::optional<std::pair<std::string, std::string>> ParsePairQuery(
    std::string_view query) {
  query = Trim(query);
  if (query.size() < 2 || query.front() != '"') return std::nullopt;
  size_t close_a = query.find('"', 1);
  if (close_a == std::string_view::npos) return std::nullopt;
  std::string_view rest = Trim(query.substr(close_a + 1));
  if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"') {
    return std::nullopt;
  }
  std::string_view b = rest.substr(1, rest.size() - 2);
  if (b.find('"') != std::string_view::npos) return std::nullopt;
  std::string a_norm = NormalizeTerm(query.substr(1, close_a - 1));
  std::string b_norm = NormalizeTerm(b);
  if (a_norm.empty() || b_norm.empty()) return std::nullopt;
  if (b_norm < a_norm) std::swap(a_norm, b_norm);
  return std::make_pair(std::move(a_norm), std::move(b_norm));
}

}  // namespace

CorpusIndex CorpusIndex::Build(const Corpus &corpus, size_t max_phrase_len) {
  if (corpus.empty()) {
    throw Error(ErrorKind::kDomain, "cannot index an empty corpus");
  }
  if (max_phrase_len < 3) {
    throw Error(ErrorKind::kDomain, "max_phrase_len must be at least 3");
  }
  CorpusIndex index;
  index.max_phrase_len_ = max_phrase_len;
  for (const Document &doc : corpus.documents()) {
    auto ordinal = static_cast<uint32_t>(index.doc_ids_.size());
    index.doc_ids_.push_back(doc.id);
    index.segments_.push_back(SplitSegments(doc.text));
    for (const TokenSpan &segment : index.segments_.back()) {
      for (size_t start = 0; start < segment.size(); ++start) {
        std::string phrase;
        for (size_t len = 1;
             len <= max_phrase_len && start + len <= segment.size(); ++len) {
          if (len > 1) phrase.push_back(' ');
          phrase += segment[start + len - 1];
          auto &docs = index.postings_[phrase];
          if (docs.empty() || docs.back() != ordinal) docs.push_back(ordinal);
        }
      }
    }
  }
  return index;
}

std::string CorpusIndex::Serialize() const {
  std::string out = "N\t" + std::to_string(doc_ids_.size()) + "\n";
  out += "L\t" + std::to_string(max_phrase_len_) + "\n";
  for (size_t d = 0; d < doc_ids_.size(); ++d) {
    out += "D\t" + doc_ids_[d];
    for (const TokenSpan &segment : segments_[d]) {
      out += "\t" + Join(segment, " ");
    }
    out += "\n";
  }
  std::vector<const std::string *> phrases;
  phrases.reserve(postings_.size());
  for (const auto &[phrase, docs] : postings_) phrases.push_back(&phrase);
  std::sort(phrases.begin(), phrases.end(),
            [](const std::string *a, const std::string *b) { return *a < *b; });
  for (const std::string *phrase : phrases) {
    out += "P\t" + *phrase + "\t";
    const auto &docs = postings_.at(*phrase);
    for (size_t i = 0; i < docs.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(docs[i]);
    }
    out += "\n";
  }
  return out;
}

CorpusIndex CorpusIndex::Parse(std::string_view text) {
  CorpusIndex index;
  std::optional<HitCount> declared;
  int line_no = 0;
  for (const std::string &line : SplitLines(text)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    const std::string &tag = fields[0];
    if (tag == "N" && fields.size() == 2) {
      declared = ParseCount(fields[1], line_no);
    } else if (tag == "L" && fields.size() == 2) {
      index.max_phrase_len_ = ParseCount(fields[1], line_no);
    } else if (tag == "D" && fields.size() >= 2) {
      index.doc_ids_.push_back(fields[1]);
      std::vector<TokenSpan> segments;
      for (size_t i = 2; i < fields.size(); ++i) {
        segments.push_back(SplitWhitespace(fields[i]));
      }
      index.segments_.push_back(std::move(segments));
    } else if (tag == "P" && fields.size() == 3) {
      std::vector<uint32_t> docs;
      std::string_view list = fields[2];
      size_t start = 0;
      while (start < list.size()) {
        size_t comma = list.find(',', start);
        if (comma == std::string_view::npos) comma = list.size();
        auto ordinal = ParseCount(list.substr(start, comma - start), line_no);
        docs.push_back(static_cast<uint32_t>(ordinal));
        start = comma + 1;
      }
      index.postings_[fields[1]] = std::move(docs);
    } else {
      throw Error(ErrorKind::kParse,
                  "malformed index line " + std::to_string(line_no), line_no);
    }
  }
  if (!declared || *declared != index.doc_ids_.size() ||
      index.doc_ids_.empty()) {
    throw Error(ErrorKind::kValidation,
                "index header does not match its document records");
  }
  return index;
}

CorpusIndex CorpusIndex::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

bool CorpusIndex::Contains(uint32_t doc,
                           const std::vector<std::string> &tokens) const {
  for (const TokenSpan &segment : segments_[doc]) {
    if (segment.size() < tokens.size()) continue;
    auto it = std::search(segment.begin(), segment.end(), tokens.begin(),
                          tokens.end());
    if (it != segment.end()) return true;
  }
  return false;
}

std::vector<uint32_t> CorpusIndex::Lookup(
    const std::vector<std::string> &tokens) const {
  if (tokens.empty()) return {};
  if (tokens.size() <= max_phrase_len_) {
    auto it = postings_.find(Join(tokens, " "));
    return it == postings_.end() ? std::vector<uint32_t>{} : it->second;
  }
  // Every window of max_phrase_len tokens must occur in a matching document.
  std::vector<uint32_t> candidates;
  for (size_t start = 0; start + max_phrase_len_ <= tokens.size();
       start += max_phrase_len_) {
    std::vector<std::string> window(tokens.begin() + start,
                                    tokens.begin() + start + max_phrase_len_);
    auto it = postings_.find(Join(window, " "));
    if (it == postings_.end()) return {};
    candidates = start == 0 ? it->second : Intersect(candidates, it->second);
    if (candidates.empty()) return {};
  }
  std::vector<uint32_t> docs;
  for (uint32_t doc : candidates) {
    if (Contains(doc, tokens)) docs.push_back(doc);
  }
  return docs;
}

std::vector<uint32_t> CorpusIndex::Documents(std::string_view phrase) const {
  return Lookup(QueryTokens(phrase));
}

HitCount CorpusIndex::Hits(std::string_view phrase) const {
  return Documents(phrase).size();
}

HitCount CorpusIndex::PairHits(std::string_view a, std::string_view b) const {
  return IntersectionSize(Documents(a), Documents(b));
}

std::string CorpusIndex::Identity() const {
  return "corpus-index(docs=" + std::to_string(doc_ids_.size()) +
         ",max_phrase_len=" + std::to_string(max_phrase_len_) + ")";
}

SnapshotTable SnapshotTable::Parse(std::string_view text) {
  SnapshotTable table;
  table.digest_ = Sha256Hex(text);
  bool have_header = false;
  int line_no = 0;
  for (const std::string &line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    if (fields[0] == "N" && fields.size() == 2) {
      if (have_header) {
        throw Error(ErrorKind::kParse, "duplicate snapshot header", line_no);
      }
      table.total_docs_ = ParseCount(fields[1], line_no);
      have_header = true;
      continue;
    }
    if (fields[0] != "H" || fields.size() != 3) {
      throw Error(ErrorKind::kParse,
                  "malformed snapshot line " + std::to_string(line_no),
                  line_no);
    }
    if (!have_header) {
      throw Error(ErrorKind::kParse, "snapshot entries before the N header",
                  line_no);
    }
    HitCount count = ParseCount(fields[2], line_no);
    if (count > table.total_docs_) {
      throw Error(ErrorKind::kValidation,
                  "snapshot line " + std::to_string(line_no) +
                      ": count exceeds total_docs",
                  line_no);
    }
    bool inserted;
    if (auto pair = ParsePairQuery(fields[1])) {
      inserted = table.pairs_.emplace(std::move(*pair), count).second;
    } else {
      std::string key = NormalizeTerm(fields[1]);
      if (key.empty()) {
        throw Error(ErrorKind::kParse, "empty snapshot query", line_no);
      }
      inserted = table.phrases_.emplace(std::move(key), count).second;
    }
    if (!inserted) {
      throw Error(ErrorKind::kParse,
                  "duplicate snapshot query '" + fields[1] + "'", line_no);
    }
  }
  if (!have_header) {
    throw Error(ErrorKind::kParse, "snapshot is missing its N header");
  }
  for (const auto &[pair, count] : table.pairs_) {
    if (count > table.Hits(pair.first) || count > table.Hits(pair.second)) {
      throw Error(ErrorKind::kValidation,
                  "co-occurrence count for '" + pair.first + "' and '" +
                      pair.second + "' exceeds a single-term count");
    }
  }
  return table;
}

SnapshotTable SnapshotTable::Load(const std::filesystem::path &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.what(), e.line());
  }
}

HitCount SnapshotTable::Hits(std::string_view phrase) const {
  auto it = phrases_.find(NormalizeTerm(phrase));
  return it == phrases_.end() ? 0 : it->second;
}

HitCount SnapshotTable::PairHits(std::string_view a,
                                 std::string_view b) const {
  std::string x = NormalizeTerm(a), y = NormalizeTerm(b);
  if (y < x) std::swap(x, y);
  auto it = pairs_.find({x, y});
  return it == pairs_.end() ? 0 : it->second;
}

std::string SnapshotTable::Identity() const {
  return "snapshot(sha256=" + digest_ + ")";
}

}  // namespace ontoenrich
