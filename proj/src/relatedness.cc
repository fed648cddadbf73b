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

#include "ontoenrich/relatedness.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <spdlog/spdlog.h>

#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"

namespace ontoenrich {

namespace {

std::vector<std::string> SortedUnique(std::vector<std::string> terms) {
  for (std::string &t : terms) t = NormalizeTerm(t);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

}  // namespace

void NgdConfig::Validate() const {
  if (!(zero_cooccurrence_cap >= 0) || !std::isfinite(zero_cooccurrence_cap)) {
    throw Error(ErrorKind::kConfig, "NGD cap must be a finite value >= 0");
  }
}

void EnrichmentConfig::Validate() const {
  if (!(threshold >= 0 && threshold <= 1)) {
    throw Error(ErrorKind::kConfig, "threshold must lie in [0, 1]");
  }
  if (top_k && *top_k == 0) {
    throw Error(ErrorKind::kConfig, "top-k must be positive when set");
  }
}

double NormalizedDistance(const PairCounts &c, const NgdConfig &cfg) {
  if (c.hits_a == 0 || c.hits_b == 0) {
    throw Error(ErrorKind::kDomain, "distance needs positive term counts");
  }
  if (c.total_docs <= std::max(c.hits_a, c.hits_b)) {
    throw Error(ErrorKind::kDegenerate,
                "total_docs must exceed both term counts");
  }
  if (c.pair_hits == 0) return cfg.zero_cooccurrence_cap;
  double log_a = std::log(static_cast<double>(c.hits_a));
  double log_b = std::log(static_cast<double>(c.hits_b));
  double log_ab = std::log(static_cast<double>(c.pair_hits));
  double log_n = std::log(static_cast<double>(c.total_docs));
  return (std::max(log_a, log_b) - log_ab) / (log_n - std::min(log_a, log_b));
}

double Ngd(std::string_view a, std::string_view b,
           const HitCountProvider &provider, const NgdConfig &cfg) {
  return NormalizedDistance({provider.Hits(a), provider.Hits(b),
                             provider.PairHits(a, b), provider.TotalDocs()},
                            cfg);
}

std::vector<NGram> NgramHitsFilter(const std::vector<NGram> &missing,
                                   const HitCountProvider &provider) {
  std::vector<NGram> kept;
  for (const NGram &ngram : missing) {
    if (provider.Hits(ngram.surface) > 0) kept.push_back(ngram);
  }
  std::sort(kept.begin(), kept.end(), [](const NGram &a, const NGram &b) {
    return a.surface < b.surface;
  });
  return kept;
}

std::vector<std::string> UsableTerms(const std::vector<std::string> &terms,
                                     const HitCountProvider &provider,
                                     std::vector<std::string> *dropped) {
  std::vector<std::string> usable;
  HitCount total = provider.TotalDocs();
  for (const std::string &term : SortedUnique(terms)) {
    HitCount hits = provider.Hits(term);
    if (hits > 0 && hits < total) {
      usable.push_back(term);
    } else if (dropped) {
      dropped->push_back(term);
    }
  }
  return usable;
}

RelatednessMatrix::RelatednessMatrix(std::vector<std::string> rows,
                                     std::vector<std::string> cols,
                                     std::vector<double> ngd)
    : rows_(std::move(rows)), cols_(std::move(cols)), ngd_(std::move(ngd)) {
  if (ngd_.size() != rows_.size() * cols_.size()) {
    throw Error(ErrorKind::kDomain, "matrix dimensions do not match cells");
  }
  denominator_ = 0;
  for (double d : ngd_) denominator_ += d;
  ntr_.resize(ngd_.size(), 1.0);
  if (denominator_ > 0) {
    for (size_t i = 0; i < ngd_.size(); ++i) {
      ntr_[i] = 1.0 - ngd_[i] / denominator_;
    }
  }
}

RelatednessMatrix RelatednessMatrix::FromNtr(std::vector<std::string> rows,
                                             std::vector<std::string> cols,
                                             std::vector<double> ntr) {
  for (double &v : ntr) v = 1.0 - v;
  RelatednessMatrix m(std::move(rows), std::move(cols), std::move(ntr));
  m.denominator_ = 1.0;
  for (size_t i = 0; i < m.ngd_.size(); ++i) m.ntr_[i] = 1.0 - m.ngd_[i];
  return m;
}

std::optional<size_t> RelatednessMatrix::RowIndex(std::string_view term) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), term);
  if (it == rows_.end() || *it != term) return std::nullopt;
  return static_cast<size_t>(it - rows_.begin());
}

std::optional<size_t> RelatednessMatrix::ColIndex(std::string_view term) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), term);
  if (it == cols_.end() || *it != term) return std::nullopt;
  return static_cast<size_t>(it - cols_.begin());
}

std::string RelatednessMatrix::ToTsv() const {
  std::string out;
  for (const std::string &col : cols_) out += "\t" + col;
  out += "\n";
  for (size_t r = 0; r < rows_.size(); ++r) {
    out += rows_[r];
    for (size_t c = 0; c < cols_.size(); ++c) {
      out += "\t" + FormatFixed(ntr(r, c), 6);
    }
    out += "\n";
  }
  return out;
}

RelatednessMatrix NtrMatrix(const std::vector<std::string> &missing_terms,
                            const std::vector<std::string> &ontology_terms,
                            const HitCountProvider &provider,
                            const NgdConfig &cfg) {
  cfg.Validate();
  std::vector<std::string> rows = SortedUnique(missing_terms);
  std::vector<std::string> cols = SortedUnique(ontology_terms);
  if (rows.empty() || cols.empty()) {
    throw Error(ErrorKind::kDomain, "relatedness needs non-empty term sets");
  }
  if (rows.size() == 1 && cols.size() == 1) {
    spdlog::warn("single-pair batch ('{}', '{}'): NTR is 0 by construction",
                 rows[0], cols[0]);
  }

  HitCount total = provider.TotalDocs();
  auto counts = [&](const std::vector<std::string> &terms) {
    std::vector<HitCount> hits;
    hits.reserve(terms.size());
    for (const std::string &t : terms) {
      hits.push_back(provider.Hits(t));
      if (hits.back() == 0) {
        throw Error(ErrorKind::kDomain, "term '" + t + "' has no hits");
      }
    }
    return hits;
  };
  std::vector<HitCount> row_hits = counts(rows);
  std::vector<HitCount> col_hits = counts(cols);

  std::vector<double> ngd(rows.size() * cols.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < cols.size(); ++c) {
      PairCounts pc{row_hits[r], col_hits[c],
                    provider.PairHits(rows[r], cols[c]), total};
      try {
        ngd[r * cols.size() + c] = NormalizedDistance(pc, cfg);
      } catch (const Error &e) {
        throw Error(e.kind(), "('" + rows[r] + "', '" + cols[c] +
                                  "'): " + e.what());
      }
    }
  }
  return RelatednessMatrix(std::move(rows), std::move(cols), std::move(ngd));
}

std::vector<CandidateRow> SelectCandidates(const RelatednessMatrix &matrix,
                                           const EnrichmentConfig &cfg) {
  cfg.Validate();
  std::vector<CandidateRow> out;
  for (size_t r = 0; r < matrix.rows().size(); ++r) {
    CandidateRow row{matrix.rows()[r], {}};
    for (size_t c = 0; c < matrix.cols().size(); ++c) {
      double value = matrix.ntr(r, c);
      if (value >= cfg.threshold) row.related.push_back({matrix.cols()[c], value});
    }
    std::stable_sort(row.related.begin(), row.related.end(),
                     [](const Candidate &a, const Candidate &b) {
                       if (a.ntr != b.ntr) return a.ntr > b.ntr;
                       return a.term < b.term;
                     });
    if (cfg.top_k && row.related.size() > *cfg.top_k) {
      row.related.resize(*cfg.top_k);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ontoenrich
