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

#include "ontoenrich/text.h"

#include <algorithm>

#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"

namespace fs = std::filesystem;

namespace ontoenrich {

namespace {

bool IsWordChar(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '\'' || c >= 0x80;
}

bool IsBlank(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Trims hyphens and apostrophes from both ends; "" means pure punctuation.
std::string_view TrimJoiners(std::string_view word) {
  while (!word.empty() && (word.front() == '-' || word.front() == '\'')) {
    word.remove_prefix(1);
  }
  while (!word.empty() && (word.back() == '-' || word.back() == '\'')) {
    word.remove_suffix(1);
  }
  return word;
}

}  // namespace

void Corpus::Add(Document doc) {
  if (doc.id.empty() || !ids_.insert(doc.id).second) {
    throw Error(ErrorKind::kValidation,
                "duplicate or empty document id '" + doc.id + "'");
  }
  if (Trim(doc.text).empty()) {
    ids_.erase(doc.id);
    throw Error(ErrorKind::kValidation, "document '" + doc.id + "' is blank");
  }
  documents_.push_back(std::move(doc));
}

Corpus Corpus::LoadDirectory(const fs::path &root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorKind::kIo, "corpus directory not found: " + root.string());
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Corpus corpus;
  for (const fs::path &file : files) {
    fs::path rel = fs::relative(file, root);
    std::string domain = "default";
    if (rel.has_parent_path()) domain = rel.begin()->string();
    corpus.Add({rel.generic_string(), domain, ReadFile(file)});
  }
  return corpus;
}

StopList::StopList(std::set<std::string> entries) {
  for (const std::string &e : entries) {
    std::string key = NormalizeTerm(e);
    if (!key.empty()) entries_.insert(std::move(key));
  }
}

StopList StopList::Parse(std::string_view text) {
  std::set<std::string> entries;
  for (const std::string &line : SplitLines(text)) {
    entries.insert(std::string(Trim(line)));
  }
  return StopList(std::move(entries));
}

StopList StopList::Load(const fs::path &path) { return Parse(ReadFile(path)); }

std::vector<TokenSpan> SplitSegments(std::string_view text) {
  std::vector<TokenSpan> segments;
  TokenSpan current;
  auto close = [&] {
    if (!current.empty()) segments.push_back(std::move(current));
    current.clear();
  };
  size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (IsBlank(c)) {
      ++i;
      continue;
    }
    if (!IsWordChar(c)) {
      close();
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && IsWordChar(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::string_view word = TrimJoiners(text.substr(start, i - start));
    if (word.empty()) {
      close();
      continue;
    }
    current.push_back(NormalizeTerm(word));
  }
  close();
  return segments;
}

std::vector<TokenSpan> StripStopwords(std::string_view text,
                                      const StopList &stoplist) {
  if (stoplist.empty()) {
    throw Error(ErrorKind::kDomain, "stopword list is empty");
  }
  std::vector<TokenSpan> spans;
  for (TokenSpan &segment : SplitSegments(text)) {
    TokenSpan current;
    for (std::string &token : segment) {
      if (stoplist.Contains(token)) {
        if (!current.empty()) spans.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(std::move(token));
      }
    }
    if (!current.empty()) spans.push_back(std::move(current));
  }
  return spans;
}

std::vector<std::string> Flatten(const std::vector<TokenSpan> &spans) {
  std::vector<std::string> tokens;
  for (const TokenSpan &span : spans) {
    tokens.insert(tokens.end(), span.begin(), span.end());
  }
  return tokens;
}

void AddNGrams(const std::vector<TokenSpan> &spans, std::string_view doc_id,
               NGramSet *out) {
  for (const TokenSpan &span : spans) {
    for (size_t start = 0; start < span.size(); ++start) {
      for (size_t len = 1;
           len <= kMaxNGramLength && start + len <= span.size(); ++len) {
        std::vector<std::string> tokens(span.begin() + start,
                                        span.begin() + start + len);
        std::string surface = Join(tokens, " ");
        auto it = out->find(surface);
        if (it == out->end()) {
          it = out->emplace(surface, NGram{std::move(tokens), surface, {}})
                   .first;
        }
        if (!doc_id.empty()) it->second.documents.emplace(doc_id);
      }
    }
  }
}

NGramSet TokenizeNGrams(const std::vector<TokenSpan> &spans,
                        std::string_view doc_id) {
  NGramSet out;
  AddNGrams(spans, doc_id, &out);
  return out;
}

Gazetteer Gazetteer::Parse(std::string_view text) {
  Gazetteer g;
  int line_no = 0;
  for (const std::string &line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || NormalizeTerm(fields[0]).empty()) {
      throw Error(ErrorKind::kParse,
                  "gazetteer line " + std::to_string(line_no) +
                      ": expected '<surface>\\t<kind>'",
                  line_no);
    }
    g.Add(fields[0], std::string(Trim(fields[1])));
  }
  return g;
}

Gazetteer Gazetteer::Load(const fs::path &path) { return Parse(ReadFile(path)); }

void Gazetteer::Add(std::string_view surface, std::string kind) {
  entries_[NormalizeTerm(surface)] = std::move(kind);
}

std::optional<std::string> Gazetteer::Lookup(std::string_view surface) const {
  auto it = entries_.find(NormalizeTerm(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

TermPartition PartitionTerms(const NGramSet &ngrams, const Ontology &ontology,
                             const Gazetteer &gazetteer) {
  TermPartition partition;
  for (const auto &[surface, ngram] : ngrams) {
    auto entity = gazetteer.Lookup(surface);
    auto match = ontology.ContainsTerm(surface);
    if (entity || match) {
      partition.known.push_back({ngram, std::move(match), std::move(entity)});
    } else {
      partition.missing.push_back(ngram);
    }
  }
  return partition;
}

std::set<std::string> PosTag(const NGram &term, const Ontology &ontology) {
  auto match = ontology.ContainsTerm(term.surface);
  if (!match) {
    throw Error(ErrorKind::kDomain,
                "'" + term.surface + "' is not defined in the ontology");
  }
  if (match->kind == TermMatch::Kind::kInstance) return {};
  return ontology.FindConcept(match->id)->categories;
}

}  // namespace ontoenrich
