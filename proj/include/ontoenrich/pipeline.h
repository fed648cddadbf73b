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

#ifndef ONTOENRICH_PIPELINE_H_
#define ONTOENRICH_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ontoenrich/error.h"
#include "ontoenrich/evaluation.h"

namespace ontoenrich {

// Pipeline stages, in execution order. Each has its own exit status.
enum class Stage {
  kConfig,        // 2
  kInput,         // 3
  kIndex,         // 4
  kTerms,         // 5
  kRelatedness,   // 6
  kPatterns,      // 7
  kPlacement,     // 8
  kOutput,        // 9
  kEval,          // 10
};

std::string_view StageName(Stage stage);
int StageExitCode(Stage stage);

class StageError : public std::runtime_error {
 public:
  StageError(Stage stage, ErrorKind kind, const std::string &message);

  Stage stage() const { return stage_; }
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return StageExitCode(stage_); }

 private:
  Stage stage_;
  ErrorKind kind_;
};

enum class ProviderKind { kIndex, kSnapshot };

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path ontology;
  ProviderKind provider = ProviderKind::kIndex;
  std::filesystem::path snapshot;      // snapshot provider
  std::filesystem::path index;         // prebuilt index; built when empty
  std::filesystem::path stopwords;     // default: bundled list
  std::filesystem::path gazetteer;     // optional
  std::filesystem::path patterns;      // default: bundled catalogue
  std::filesystem::path plurals;       // optional inflection exceptions
  std::filesystem::path out_dir = "out";
  double threshold = 0.5;
  double ngd_cap = 1.0;
  std::optional<size_t> top_k;
  size_t max_phrase_len = 3;
  size_t path_depth = 5;

  // Throws StageError(kConfig) for a missing input file or a bad value.
  void Validate() const;
};

std::filesystem::path DefaultStopwordsPath();
std::filesystem::path DefaultPatternsPath();

enum class RunMode {
  kRelatedness,   // stops after the relatedness matrix
  kPatterns,      // stops after relation extraction
  kEnrich,        // full run
};

struct RunSummary {
  size_t documents = 0;
  size_t ngrams = 0;
  size_t known_terms = 0;
  size_t missing_terms = 0;
  size_t eliminated_terms = 0;
  size_t candidate_pairs = 0;
  size_t decisions = 0;
  size_t unresolved = 0;
  size_t added_concepts = 0;
  size_t added_instances = 0;
  size_t added_axioms = 0;
  std::vector<std::filesystem::path> written;
};

// Builds an index over `corpus` and writes it to `out`.
RunSummary RunIndex(const std::filesystem::path &corpus,
                    const std::filesystem::path &out,
                    size_t max_phrase_len = 3);

// Runs the pipeline up to `mode` and writes its outputs into cfg.out_dir:
//
//   relatedness.tsv        NTR matrix
//   audit.tsv              every pattern query and its count
//   paths.tsv              sense path scores of multi-sense placements
//   report.tsv             one line per placement decision
//   ontology.tsv           enriched ontology
//   judgments.tsv          eliminated/retained terms and placements
//   manifest.json          configuration and input digests
//
// Throws StageError tagged with the failing stage.
RunSummary RunPipeline(const RunConfig &cfg, RunMode mode);

// Compares system and expert judgment files. Writes the report to `out`
// unless it is empty.
PrecisionReport RunEval(const std::filesystem::path &system,
                        const std::filesystem::path &expert,
                        bool require_relation,
                        const std::filesystem::path &out = {});

}  // namespace ontoenrich

#endif  // ONTOENRICH_PIPELINE_H_
