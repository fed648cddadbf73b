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

#ifndef ONTOENRICH_RELATEDNESS_H_
#define ONTOENRICH_RELATEDNESS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoenrich/hits.h"
#include "ontoenrich/text.h"

namespace ontoenrich {

struct NgdConfig {
  // Distance used when two terms never co-occur (log 0 is undefined).
  double zero_cooccurrence_cap = 1.0;

  void Validate() const;
};

struct EnrichmentConfig {
  double threshold = 0.5;            // v in [0, 1]
  std::optional<size_t> top_k;       // per missing term, unbounded if unset

  void Validate() const;
};

// Document frequencies behind one normalized distance.
struct PairCounts {
  HitCount hits_a = 0;
  HitCount hits_b = 0;
  HitCount pair_hits = 0;
  HitCount total_docs = 0;
};

// Normalized distance of two terms from their counts:
//
//   (max(log f(a), log f(b)) - log f(a,b)) / (log N - min(log f(a), log f(b)))
//
// Returns cfg.zero_cooccurrence_cap when f(a,b) == 0. Throws Error(kDomain)
// when either single count is 0 and Error(kDegenerate) when N does not exceed
// both single counts.
double NormalizedDistance(const PairCounts &counts, const NgdConfig &cfg);

double Ngd(std::string_view a, std::string_view b,
           const HitCountProvider &provider, const NgdConfig &cfg);

// Keeps the n-grams with at least one hit, in lexicographic surface order.
std::vector<NGram> NgramHitsFilter(const std::vector<NGram> &missing,
                                   const HitCountProvider &provider);

// Splits terms into those a distance can be computed for (0 < hits < N) and
// the rest, which are appended to `dropped` when it is non-null. Output is
// sorted and deduplicated.
std::vector<std::string> UsableTerms(const std::vector<std::string> &terms,
                                     const HitCountProvider &provider,
                                     std::vector<std::string> *dropped);

// NTR values for every (missing, ontology) pair of one batch.
//
// cell(i, j) = 1 - ngd(i, j) / sum of ngd over all pairs of the batch, and
// every cell is 1 when that sum is 0. Rows and columns are sorted, and the
// sum is accumulated in row-major order so results are reproducible.
class RelatednessMatrix {
 public:
  RelatednessMatrix(std::vector<std::string> rows,
                    std::vector<std::string> cols, std::vector<double> ngd);

  // Wraps externally supplied NTR values, e.g. a published table. Such values
  // need not come from one consistent batch, so ngd() is set to 1 - ntr and
  // denominator() to 1.
  static RelatednessMatrix FromNtr(std::vector<std::string> rows,
                                   std::vector<std::string> cols,
                                   std::vector<double> ntr);

  const std::vector<std::string> &rows() const { return rows_; }
  const std::vector<std::string> &cols() const { return cols_; }
  double denominator() const { return denominator_; }

  double ngd(size_t row, size_t col) const {
    return ngd_[row * cols_.size() + col];
  }
  double ntr(size_t row, size_t col) const {
    return ntr_[row * cols_.size() + col];
  }

  std::optional<size_t> RowIndex(std::string_view term) const;
  std::optional<size_t> ColIndex(std::string_view term) const;

  // Column labels on the first row, row labels in the first column, cells
  // with six decimals.
  std::string ToTsv() const;

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<double> ngd_;
  std::vector<double> ntr_;
  double denominator_ = 0;
};

// Throws Error(kDomain) when either term set is empty or a term has no hits.
RelatednessMatrix NtrMatrix(const std::vector<std::string> &missing_terms,
                            const std::vector<std::string> &ontology_terms,
                            const HitCountProvider &provider,
                            const NgdConfig &cfg);

struct Candidate {
  std::string term;
  double ntr = 0;
};

struct CandidateRow {
  std::string missing;
  std::vector<Candidate> related;   // NTR descending, ties by term
};

// Per missing term, the ontology terms with NTR >= threshold, truncated to
// top_k when set. Rows with no candidate are kept with an empty list.
std::vector<CandidateRow> SelectCandidates(const RelatednessMatrix &matrix,
                                           const EnrichmentConfig &cfg);

}  // namespace ontoenrich

#endif  // ONTOENRICH_RELATEDNESS_H_
