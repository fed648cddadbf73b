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

#include "ontoenrich/pipeline.h"

#include <cmath>
#include <map>
#include <memory>
#include <set>

#include "json.hpp"
#include "ontoenrich/enrichment.h"
#include "ontoenrich/hits.h"
#include "ontoenrich/ontology.h"
#include "ontoenrich/patterns.h"
#include "ontoenrich/relatedness.h"
#include "ontoenrich/strings.h"
#include "ontoenrich/text.h"
#include "spdlog/spdlog.h"

namespace ontoenrich {

namespace fs = std::filesystem;

namespace {

template <typename Fn>
auto Staged(Stage stage, Fn &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError &) {
    throw;
  } catch (const Error &e) {
    throw StageError(stage, e.kind(), e.what());
  } catch (const std::exception &e) {
    throw StageError(stage, ErrorKind::kIo, e.what());
  }
}

std::string_view ModeName(RunMode mode) {
  switch (mode) {
    case RunMode::kRelatedness: return "relatedness";
    case RunMode::kPatterns: return "patterns";
    case RunMode::kEnrich: return "enrich";
  }
  return "enrich";
}

std::string FileDigest(const fs::path &path) {
  return path.empty() ? "" : Sha256Hex(ReadFile(path));
}

std::string CorpusDigest(const Corpus &corpus) {
  std::string data;
  for (const Document &doc : corpus.documents()) {
    data += doc.id;
    data += '\0';
    data += doc.text;
    data += '\0';
  }
  return Sha256Hex(data);
}

std::string Domain(const std::string &doc_id) {
  size_t slash = doc_id.find('/');
  return slash == std::string::npos ? "default" : doc_id.substr(0, slash);
}

std::set<std::string> Domains(const NGram &ngram) {
  std::set<std::string> out;
  for (const std::string &doc : ngram.documents) out.insert(Domain(doc));
  return out;
}

std::string PathScoresTsv(const std::vector<PlacementDecision> &decisions) {
  std::string out = "# term\ttarget\tsense\tscore\tlabels\n";
  for (const PlacementDecision &d : decisions) {
    for (const PathScore &ps : d.path_scores) {
      out += d.missing_term + "\t" + d.target_id + "\t" +
             std::to_string(ps.sense) + "\t" +
             (ps.score ? FormatFixed(*ps.score, 6) : "NA") + "\t" +
             Join(ps.labels, " > ") + "\n";
    }
  }
  return out;
}

void Write(const RunConfig &cfg, RunSummary &summary, const std::string &name,
           std::string_view contents) {
  Staged(Stage::kOutput, [&] {
    fs::path path = cfg.out_dir / name;
    WriteFile(path, contents);
    summary.written.push_back(path);
  });
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kConfig: return "config";
    case Stage::kInput: return "input";
    case Stage::kIndex: return "index";
    case Stage::kTerms: return "terms";
    case Stage::kRelatedness: return "relatedness";
    case Stage::kPatterns: return "patterns";
    case Stage::kPlacement: return "placement";
    case Stage::kOutput: return "output";
    case Stage::kEval: return "eval";
  }
  return "config";
}

int StageExitCode(Stage stage) { return 2 + static_cast<int>(stage); }

StageError::StageError(Stage stage, ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(StageName(stage)) + ": " + message),
      stage_(stage),
      kind_(kind) {}

fs::path DefaultStopwordsPath() {
  return fs::path(ONTOENRICH_DATA_DIR) / "stopwords.txt";
}

fs::path DefaultPatternsPath() {
  return fs::path(ONTOENRICH_DATA_DIR) / "patterns.tsv";
}

void RunConfig::Validate() const {
  auto fail = [](const std::string &msg) {
    throw StageError(Stage::kConfig, ErrorKind::kConfig, msg);
  };
  auto need_file = [&](const fs::path &p, const char *what) {
    if (!p.empty() && !fs::is_regular_file(p)) {
      fail(std::string(what) + " '" + p.string() + "' does not exist");
    }
  };
  if (corpus.empty()) fail("a corpus directory is required");
  if (!fs::is_directory(corpus)) {
    fail("corpus '" + corpus.string() + "' is not a directory");
  }
  if (ontology.empty()) fail("an ontology file is required");
  need_file(ontology, "ontology");
  if (provider == ProviderKind::kSnapshot && snapshot.empty()) {
    fail("the snapshot provider needs a snapshot file");
  }
  need_file(snapshot, "snapshot");
  need_file(index, "index");
  need_file(stopwords, "stopword list");
  need_file(gazetteer, "gazetteer");
  need_file(patterns, "pattern catalogue");
  need_file(plurals, "plural exceptions");
  if (out_dir.empty()) fail("an output directory is required");
  if (max_phrase_len < 3) fail("max phrase length must be at least 3");
  if (path_depth == 0) fail("path depth must be positive");
  try {
    NgdConfig{ngd_cap}.Validate();
    EnrichmentConfig{threshold, top_k}.Validate();
  } catch (const Error &e) {
    fail(e.what());
  }
}

RunSummary RunIndex(const fs::path &corpus, const fs::path &out,
                    size_t max_phrase_len) {
  RunSummary summary;
  Corpus docs = Staged(Stage::kInput, [&] {
    return Corpus::LoadDirectory(corpus);
  });
  std::string text = Staged(Stage::kIndex, [&] {
    return CorpusIndex::Build(docs, max_phrase_len).Serialize();
  });
  Staged(Stage::kOutput, [&] {
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    WriteFile(out, text);
  });
  summary.documents = docs.size();
  summary.written.push_back(out);
  return summary;
}

RunSummary RunPipeline(const RunConfig &input_cfg, RunMode mode) {
  RunConfig cfg = input_cfg;
  if (cfg.stopwords.empty()) cfg.stopwords = DefaultStopwordsPath();
  if (cfg.patterns.empty()) cfg.patterns = DefaultPatternsPath();
  cfg.Validate();
  RunSummary summary;
  NgdConfig ngd_cfg{cfg.ngd_cap};

  // Inputs.
  Ontology ontology;
  StopList stoplist;
  Gazetteer gazetteer;
  PatternCatalogue catalogue;
  Inflector inflector;
  Corpus corpus;
  Staged(Stage::kInput, [&] {
    ontology = Ontology::Load(cfg.ontology);
    stoplist = StopList::Load(cfg.stopwords);
    if (!cfg.gazetteer.empty()) gazetteer = Gazetteer::Load(cfg.gazetteer);
    catalogue = PatternCatalogue::Load(cfg.patterns);
    if (!cfg.plurals.empty()) inflector = Inflector::Load(cfg.plurals);
    corpus = Corpus::LoadDirectory(cfg.corpus);
    if (corpus.empty()) {
      throw Error(ErrorKind::kDomain,
                  "corpus '" + cfg.corpus.string() + "' has no documents");
    }
  });
  summary.documents = corpus.size();

  std::unique_ptr<HitCountProvider> provider;
  if (cfg.provider == ProviderKind::kSnapshot) {
    provider = Staged(Stage::kInput, [&] {
      return std::make_unique<SnapshotTable>(SnapshotTable::Load(cfg.snapshot));
    });
  } else {
    provider = Staged(Stage::kIndex, [&] {
      return std::make_unique<CorpusIndex>(
          cfg.index.empty() ? CorpusIndex::Build(corpus, cfg.max_phrase_len)
                            : CorpusIndex::Load(cfg.index));
    });
  }

  // Term extraction and the n-gram hits filter.
  NGramSet ngrams;
  TermPartition partition;
  std::vector<NGram> survivors;
  std::vector<std::string> missing_terms, ontology_terms;
  Staged(Stage::kTerms, [&] {
    for (const Document &doc : corpus.documents()) {
      AddNGrams(StripStopwords(doc.text, stoplist), doc.id, &ngrams);
    }
    partition = PartitionTerms(ngrams, ontology, gazetteer);
    survivors = NgramHitsFilter(partition.missing, *provider);
    std::vector<std::string> surfaces, dropped;
    for (const NGram &g : survivors) surfaces.push_back(g.surface);
    missing_terms = UsableTerms(surfaces, *provider, &dropped);
    surfaces.clear();
    for (const KnownTerm &k : partition.known) {
      if (k.match && k.match->kind == TermMatch::Kind::kConcept) {
        surfaces.push_back(k.ngram.surface);
      }
    }
    ontology_terms = UsableTerms(surfaces, *provider, &dropped);
  });
  summary.ngrams = ngrams.size();
  summary.known_terms = partition.known.size();
  summary.missing_terms = partition.missing.size();
  summary.eliminated_terms = partition.missing.size() - survivors.size();

  Staged(Stage::kOutput, [&] { fs::create_directories(cfg.out_dir); });

  // Relatedness and candidate selection.
  std::optional<RelatednessMatrix> matrix;
  std::vector<CandidateRow> candidates;
  Staged(Stage::kRelatedness, [&] {
    if (missing_terms.empty() || ontology_terms.empty()) {
      spdlog::warn("no usable {} terms; nothing to relate",
                   missing_terms.empty() ? "missing" : "ontology");
      return;
    }
    matrix = NtrMatrix(missing_terms, ontology_terms, *provider, ngd_cfg);
    candidates = SelectCandidates(*matrix, {cfg.threshold, cfg.top_k});
  });
  for (const CandidateRow &row : candidates) {
    summary.candidate_pairs += row.related.size();
  }
  Write(cfg, summary, "relatedness.tsv",
        matrix ? matrix->ToTsv() : std::string());

  // Relation extraction.
  std::vector<RelationSuggestion> suggestions;
  if (mode != RunMode::kRelatedness) {
    Staged(Stage::kPatterns, [&] {
      for (const CandidateRow &row : candidates) {
        for (const Candidate &c : row.related) {
          suggestions.push_back(ExtractRelation(row.missing, c.term, *provider,
                                                catalogue, inflector));
        }
      }
    });
    Write(cfg, summary, "audit.tsv", AuditToTsv(suggestions));
  }

  // Placement and enrichment.
  if (mode == RunMode::kEnrich) {
    EnrichmentResult result = Staged(Stage::kPlacement, [&] {
      ScoringContext ctx{provider.get(), ngd_cfg,
                         matrix ? matrix->denominator() : 1.0, cfg.path_depth};
      std::vector<RelationSuggestion> unresolved;
      auto decisions = PlaceAll(suggestions, ontology, ctx, &unresolved);
      for (const RelationSuggestion &s : unresolved) {
        spdlog::warn("unresolved sense for ('{}', '{}')", s.missing_term,
                     s.target_term);
      }
      EnrichmentResult r = EnrichOntology(ontology, decisions);
      r.unresolved = std::move(unresolved);
      return r;
    });
    summary.decisions = result.decisions.size();
    summary.unresolved = result.unresolved.size();
    summary.added_concepts = result.added_concepts.size();
    summary.added_instances = result.added_instances.size();
    summary.added_axioms = result.added_axioms;

    Judgments judgments;
    std::set<std::string> kept;
    for (const NGram &g : survivors) kept.insert(g.surface);
    std::map<std::string, std::set<std::string>> term_domains;
    for (const NGram &g : partition.missing) {
      std::set<std::string> domains = Domains(g);
      for (const std::string &d : domains) {
        judgments.AddVerdict(d, !kept.count(g.surface), g.surface);
      }
      term_domains[g.surface] = std::move(domains);
    }
    for (const PlacementDecision &d : result.decisions) {
      const std::string &label = ontology.FindConcept(d.target_id)->label;
      std::vector<SenseId> senses =
          d.senses.empty() ? std::vector<SenseId>{1} : d.senses;
      for (const std::string &domain : term_domains[d.missing_term]) {
        for (SenseId sense : senses) {
          judgments.AddPlacement(domain,
                                 {d.missing_term, label, sense, d.relation});
        }
      }
    }

    Write(cfg, summary, "paths.tsv", PathScoresTsv(result.decisions));
    Write(cfg, summary, "report.tsv", EnrichmentReportTsv(result));
    Write(cfg, summary, "ontology.tsv", result.ontology.Serialize());
    Write(cfg, summary, "judgments.tsv", judgments.Serialize());
  }

  nlohmann::json manifest = Staged(Stage::kOutput, [&] {
    nlohmann::json m;
    m["mode"] = ModeName(mode);
    m["threshold"] = cfg.threshold;
    m["ngd_cap"] = cfg.ngd_cap;
    m["top_k"] = cfg.top_k ? nlohmann::json(*cfg.top_k) : nlohmann::json();
    m["max_phrase_len"] = cfg.max_phrase_len;
    m["path_depth"] = cfg.path_depth;
    m["catalogue_sha256"] = catalogue.Digest();
    m["provider"] = provider->Identity();
    m["inputs"] = {
        {"corpus_sha256", CorpusDigest(corpus)},
        {"ontology_sha256", FileDigest(cfg.ontology)},
        {"stopwords_sha256", FileDigest(cfg.stopwords)},
        {"gazetteer_sha256", FileDigest(cfg.gazetteer)},
        {"plurals_sha256", FileDigest(cfg.plurals)},
    };
    m["counts"] = {
        {"documents", summary.documents},
        {"ngrams", summary.ngrams},
        {"known_terms", summary.known_terms},
        {"missing_terms", summary.missing_terms},
        {"eliminated_terms", summary.eliminated_terms},
        {"candidate_pairs", summary.candidate_pairs},
        {"decisions", summary.decisions},
        {"unresolved", summary.unresolved},
        {"added_concepts", summary.added_concepts},
        {"added_instances", summary.added_instances},
        {"added_axioms", summary.added_axioms},
    };
    nlohmann::json outputs = nlohmann::json::array();
    for (const fs::path &p : summary.written) {
      outputs.push_back(p.filename().string());
    }
    m["outputs"] = outputs;
    return m;
  });
  Write(cfg, summary, "manifest.json", manifest.dump(2) + "\n");
  return summary;
}

PrecisionReport RunEval(const fs::path &system, const fs::path &expert,
                        bool require_relation, const fs::path &out) {
  Judgments sys = Staged(Stage::kInput, [&] { return Judgments::Load(system); });
  Judgments exp = Staged(Stage::kInput, [&] { return Judgments::Load(expert); });
  PrecisionReport report = Staged(Stage::kEval, [&] {
    return Evaluate(sys, exp, require_relation);
  });
  for (const std::string &w : report.warnings) spdlog::warn("{}", w);
  if (!out.empty()) {
    Staged(Stage::kOutput, [&] {
      if (out.has_parent_path()) fs::create_directories(out.parent_path());
      WriteFile(out, report.ToTsv());
    });
  }
  return report;
}

}  // namespace ontoenrich
