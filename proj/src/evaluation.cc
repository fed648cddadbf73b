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

#include "ontoenrich/evaluation.h"

#include <algorithm>

#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"

namespace ontoenrich {

namespace {

size_t IntersectionSize(const std::set<std::string> &a,
                        const std::set<std::string> &b) {
  size_t n = 0;
  for (const std::string &x : a) n += b.count(x);
  return n;
}

std::optional<double> Ratio(size_t num, size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Cell(const std::optional<double> &value) {
  return value ? FormatFixed(*value, 2) : "NA";
}

}  // namespace

void Judgments::AddVerdict(std::string_view domain, bool eliminated,
                           std::string_view term) {
  DomainJudgments &d = domains_[std::string(domain)];
  std::string key = NormalizeTerm(term);
  auto &other = eliminated ? d.retained : d.eliminated;
  if (other.count(key)) {
    throw Error(ErrorKind::kValidation,
                "term '" + key + "' is both eliminated and retained in '" +
                    std::string(domain) + "'");
  }
  (eliminated ? d.eliminated : d.retained).insert(std::move(key));
}

void Judgments::AddPlacement(std::string_view domain, Placement placement) {
  placement.term = NormalizeTerm(placement.term);
  placement.target = NormalizeTerm(placement.target);
  domains_[std::string(domain)].placements.insert(std::move(placement));
}

Judgments Judgments::Parse(std::string_view text) {
  Judgments j;
  int line_no = 0;
  for (const std::string &line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line[0] == '#') continue;
    auto f = SplitTabs(line);
    try {
      if (f[0] == "E" && f.size() == 4) {
        if (f[2] != "eliminated" && f[2] != "retained") {
          throw Error(ErrorKind::kParse, "verdict must be eliminated|retained");
        }
        j.AddVerdict(f[1], f[2] == "eliminated", f[3]);
      } else if (f[0] == "X" && f.size() == 6) {
        auto relation = ParseRelation(f[5]);
        if (!relation) throw Error(ErrorKind::kParse, "unknown relation");
        auto sense = ParseCount(f[4]);
        if (sense == 0) throw Error(ErrorKind::kParse, "senses start at 1");
        j.AddPlacement(f[1], {f[2], f[3], static_cast<SenseId>(sense),
                              *relation});
      } else {
        throw Error(ErrorKind::kParse, "expected an E or X record");
      }
    } catch (const Error &e) {
      throw Error(e.kind(),
                  "judgments line " + std::to_string(line_no) + ": " + e.what(),
                  line_no);
    }
  }
  return j;
}

Judgments Judgments::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

std::string Judgments::Serialize() const {
  std::string out;
  for (const auto &[domain, d] : domains_) {
    for (const std::string &t : d.eliminated) {
      out += "E\t" + domain + "\teliminated\t" + t + "\n";
    }
    for (const std::string &t : d.retained) {
      out += "E\t" + domain + "\tretained\t" + t + "\n";
    }
    for (const Placement &p : d.placements) {
      out += "X\t" + domain + "\t" + p.term + "\t" + p.target + "\t" +
             std::to_string(p.sense) + "\t" +
             std::string(RelationName(p.relation)) + "\n";
    }
  }
  return out;
}

std::optional<double> EliminationPrecision(
    const std::set<std::string> &system_eliminated,
    const std::set<std::string> &expert_eliminated) {
  return Ratio(IntersectionSize(system_eliminated, expert_eliminated),
               system_eliminated.size());
}

std::optional<double> RetentionPrecision(
    const std::set<std::string> &system_retained,
    const std::set<std::string> &expert_retained) {
  return Ratio(IntersectionSize(system_retained, expert_retained),
               system_retained.size());
}

size_t CountMatchingPlacements(const std::set<Placement> &system_placements,
                               const std::set<Placement> &expert_placements,
                               bool require_relation) {
  if (require_relation) {
    size_t n = 0;
    for (const Placement &p : system_placements) {
      n += expert_placements.count(p);
    }
    return n;
  }
  std::set<std::tuple<std::string, std::string, SenseId>> expert_slots;
  for (const Placement &p : expert_placements) {
    expert_slots.emplace(p.term, p.target, p.sense);
  }
  size_t n = 0;
  for (const Placement &p : system_placements) {
    n += expert_slots.count({p.term, p.target, p.sense});
  }
  return n;
}

std::optional<double> EnrichmentPrecision(
    const std::set<Placement> &system_placements,
    const std::set<Placement> &expert_placements, bool require_relation) {
  return Ratio(CountMatchingPlacements(system_placements, expert_placements,
                                       require_relation),
               system_placements.size());
}

const DomainReport *PrecisionReport::Find(std::string_view domain) const {
  for (const DomainReport &d : domains) {
    if (d.domain == domain) return &d;
  }
  return nullptr;
}

std::string PrecisionReport::ToTsv() const {
  std::string out =
      "domain\texpert_eliminated\tsystem_eliminated\tcorrect_eliminated\t"
      "elimination_precision\terror_rate\texpert_retained\tsystem_retained\t"
      "correct_retained\tretention_precision\texpert_placements\t"
      "system_placements\tcorrect_placements\tenrichment_precision\n";
  for (const DomainReport &d : domains) {
    out += d.domain + "\t" + std::to_string(d.expert_eliminated) + "\t" +
           std::to_string(d.system_eliminated) + "\t" +
           std::to_string(d.correct_eliminated) + "\t" +
           Cell(d.elimination_precision) + "\t" + Cell(d.error_rate) + "\t" +
           std::to_string(d.expert_retained) + "\t" +
           std::to_string(d.system_retained) + "\t" +
           std::to_string(d.correct_retained) + "\t" +
           Cell(d.retention_precision) + "\t" +
           std::to_string(d.expert_placements) + "\t" +
           std::to_string(d.system_placements) + "\t" +
           std::to_string(d.correct_placements) + "\t" +
           Cell(d.enrichment_precision) + "\n";
  }
  return out;
}

PrecisionReport Evaluate(const Judgments &system, const Judgments &expert,
                         bool require_relation) {
  PrecisionReport report;
  static const DomainJudgments kEmpty;
  for (const auto &[domain, e] : expert.domains()) {
    auto it = system.domains().find(domain);
    const DomainJudgments &s = it == system.domains().end() ? kEmpty
                                                            : it->second;
    if (it == system.domains().end()) {
      report.warnings.push_back("domain '" + domain +
                                "' has no system output");
    }
    DomainReport r;
    r.domain = domain;
    r.expert_eliminated = e.eliminated.size();
    r.system_eliminated = s.eliminated.size();
    r.correct_eliminated = IntersectionSize(s.eliminated, e.eliminated);
    r.elimination_precision = EliminationPrecision(s.eliminated, e.eliminated);
    if (r.elimination_precision) r.error_rate = 1.0 - *r.elimination_precision;
    r.expert_retained = e.retained.size();
    r.system_retained = s.retained.size();
    r.correct_retained = IntersectionSize(s.retained, e.retained);
    r.retention_precision = RetentionPrecision(s.retained, e.retained);
    r.expert_placements = e.placements.size();
    r.system_placements = s.placements.size();
    r.correct_placements =
        CountMatchingPlacements(s.placements, e.placements, require_relation);
    r.enrichment_precision =
        EnrichmentPrecision(s.placements, e.placements, require_relation);
    report.domains.push_back(std::move(r));
  }
  for (const auto &[domain, s] : system.domains()) {
    if (!expert.domains().count(domain)) {
      report.warnings.push_back("domain '" + domain +
                                "' is missing from the expert judgments");
    }
  }
  return report;
}

}  // namespace ontoenrich
