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

// Command line front end.
//
//   ontoenrich index --corpus DIR --out FILE
//   ontoenrich enrich --corpus DIR --ontology FILE [--snapshot FILE] ...
//   ontoenrich relatedness ...      (matrix only)
//   ontoenrich patterns ...         (pattern audit only)
//   ontoenrich eval --system FILE --expert FILE [--out FILE]
//
// Run options can also come from an INI/TOML file given with --config, one
// section per subcommand ([enrich], [relatedness], [patterns]); flags on the
// command line take precedence.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "ontoenrich/pipeline.h"
#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"

namespace {

using ontoenrich::ProviderKind;
using ontoenrich::RunConfig;
using ontoenrich::RunMode;

struct RunFlags {
  RunConfig cfg;
  std::string provider = "auto";
  size_t top_k = 0;
};

void AddRunOptions(CLI::App *sub, RunFlags *flags) {
  RunConfig &cfg = flags->cfg;
  sub->fallthrough();
  sub->add_option("--corpus", cfg.corpus, "Corpus directory");
  sub->add_option("--ontology", cfg.ontology, "Ontology file");
  sub->add_option("--provider", flags->provider,
                  "Hit count provider: index, snapshot or auto")
      ->check(CLI::IsMember({"auto", "index", "snapshot"}));
  sub->add_option("--snapshot", cfg.snapshot, "Snapshot hit count table");
  sub->add_option("--index", cfg.index, "Prebuilt corpus index");
  sub->add_option("--stopwords", cfg.stopwords, "Stop word list");
  sub->add_option("--gazetteer", cfg.gazetteer, "Gazetteer of known names");
  sub->add_option("--patterns", cfg.patterns, "Pattern catalogue");
  sub->add_option("--plurals", cfg.plurals, "Irregular plural exceptions");
  sub->add_option("--out-dir", cfg.out_dir, "Output directory")
      ->capture_default_str();
  sub->add_option("--threshold", cfg.threshold, "Relatedness threshold v")
      ->capture_default_str();
  sub->add_option("--ngd-cap", cfg.ngd_cap,
                  "Distance used for pairs that never co-occur")
      ->capture_default_str();
  sub->add_option("--top-k", flags->top_k,
                  "Keep at most k candidates per missing term (0: all)");
  sub->add_option("--max-phrase-len", cfg.max_phrase_len,
                  "Longest phrase held in the index")
      ->capture_default_str();
  sub->add_option("--path-depth", cfg.path_depth,
                  "Ancestors scored per sense path")
      ->capture_default_str();
}

RunConfig Finish(RunFlags &flags) {
  RunConfig cfg = flags.cfg;
  if (flags.provider == "snapshot" ||
      (flags.provider == "auto" && !cfg.snapshot.empty())) {
    cfg.provider = ProviderKind::kSnapshot;
  }
  if (flags.top_k > 0) cfg.top_k = flags.top_k;
  return cfg;
}

void PrintSummary(const ontoenrich::RunSummary &s) {
  std::printf(
      "documents=%zu ngrams=%zu known=%zu missing=%zu eliminated=%zu "
      "candidates=%zu decisions=%zu unresolved=%zu concepts+=%zu "
      "instances+=%zu axioms+=%zu\n",
      s.documents, s.ngrams, s.known_terms, s.missing_terms,
      s.eliminated_terms, s.candidate_pairs, s.decisions, s.unresolved,
      s.added_concepts, s.added_instances, s.added_axioms);
  for (const auto &path : s.written) std::printf("wrote %s\n", path.c_str());
}

}  // namespace

int main(int argc, char **argv) {
  spdlog::set_default_logger(spdlog::stderr_color_st("ontoenrich"));

  CLI::App app{"Enrich an ontology with terms mined from a text corpus"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read run options from an INI/TOML file");

  std::string index_corpus, index_out;
  size_t index_len = 3;
  CLI::App *index = app.add_subcommand("index", "Build a corpus index");
  index->add_option("--corpus", index_corpus, "Corpus directory")->required();
  index->add_option("--out", index_out, "Index file")->required();
  index->add_option("--max-phrase-len", index_len, "Longest indexed phrase")
      ->capture_default_str();

  RunFlags enrich_flags, relatedness_flags, patterns_flags;
  CLI::App *enrich = app.add_subcommand("enrich", "Run the full pipeline");
  AddRunOptions(enrich, &enrich_flags);
  CLI::App *relatedness =
      app.add_subcommand("relatedness", "Write the relatedness matrix only");
  AddRunOptions(relatedness, &relatedness_flags);
  CLI::App *patterns =
      app.add_subcommand("patterns", "Write the pattern query audit only");
  AddRunOptions(patterns, &patterns_flags);

  std::string system, expert, eval_out;
  bool ignore_relation = false;
  CLI::App *eval = app.add_subcommand("eval", "Compute precision figures");
  eval->add_option("--system", system, "System judgments file")->required();
  eval->add_option("--expert", expert, "Expert judgments file")->required();
  eval->add_option("--out", eval_out, "Report file");
  eval->add_flag("--ignore-relation", ignore_relation,
                 "Match placements on term, target and sense only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*index) {
      PrintSummary(ontoenrich::RunIndex(index_corpus, index_out, index_len));
    } else if (*enrich) {
      PrintSummary(ontoenrich::RunPipeline(Finish(enrich_flags),
                                           RunMode::kEnrich));
    } else if (*relatedness) {
      PrintSummary(ontoenrich::RunPipeline(Finish(relatedness_flags),
                                           RunMode::kRelatedness));
    } else if (*patterns) {
      PrintSummary(ontoenrich::RunPipeline(Finish(patterns_flags),
                                           RunMode::kPatterns));
    } else if (*eval) {
      auto report =
          ontoenrich::RunEval(system, expert, !ignore_relation, eval_out);
      std::fputs(report.ToTsv().c_str(), stdout);
    }
  } catch (const ontoenrich::StageError &e) {
    spdlog::error("{}", e.what());
    return e.exit_code();
  }
  return 0;
}
