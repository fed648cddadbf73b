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

#include <fstream>
#include <random>

#include "doctest.h"
#include "ontoenrich/error.h"
#include "ontoenrich/strings.h"
#include "test_util.h"

namespace ontoenrich {
namespace {

using testing::Fixture;
using testing::TempDir;

const char kExample1[] =
    "Java (Indonesian: Jawa) is an island of Indonesia and the site of its "
    "capital city, Jakarta. Once the centre of powerful Hindu-Buddhist "
    "kingdoms, Islamic sultanates, and the core of the colonial Dutch East "
    "Indies, Java now plays a dominant role in the economic and political "
    "life of Indonesia, home to a population of 130 million in 2006.";

StopList DefaultStops() {
  return StopList::Load(ONTOENRICH_DATA_DIR "/stopwords.txt");
}

TEST_CASE("strip_stopwords removes stopwords and punctuation") {
  StopList stops = DefaultStops();
  auto spans = StripStopwords("Java (Indonesian: Jawa) is an island of Indonesia",
                              stops);
  auto tokens = Flatten(spans);
  CHECK(tokens == std::vector<std::string>{"java", "indonesian", "jawa",
                                           "island", "indonesia"});
  for (const auto &t : tokens) {
    CHECK_FALSE(stops.Contains(t));
    CHECK(t.find_first_of("():") == std::string::npos);
  }
  CHECK(StripStopwords("", stops).empty());
  CHECK(StripStopwords("the of an a is", stops).empty());
  CHECK_THROWS_AS(StripStopwords("java", StopList()), Error);
}

TEST_CASE("segments keep hyphenated words whole") {
  auto spans = SplitSegments("Hindu-Buddhist kingdoms, 'quoted' -dash- it's");
  REQUIRE(spans.size() == 2);
  CHECK(spans[0] == TokenSpan{"hindu-buddhist", "kingdoms"});
  CHECK(spans[1] == TokenSpan{"quoted", "dash", "it's"});
}

TEST_CASE("tokenize_ngrams counts") {
  NGramSet three = TokenizeNGrams({{"java", "island", "indonesia"}});
  CHECK(three.size() == 6);
  size_t by_len[4] = {0, 0, 0, 0};
  for (const auto &[s, g] : three) ++by_len[g.tokens.size()];
  CHECK(by_len[1] == 3);
  CHECK(by_len[2] == 2);
  CHECK(by_len[3] == 1);
  CHECK(TokenizeNGrams({{"java"}}).size() == 1);
  CHECK(TokenizeNGrams({}).empty());
  // Four tokens still stop at trigrams.
  NGramSet four = TokenizeNGrams({{"a1", "b2", "c3", "d4"}});
  CHECK(four.size() == 4 + 3 + 2);
}

TEST_CASE("n-grams merge sources and never cross spans") {
  NGramSet set;
  AddNGrams({{"capital", "city"}}, "d1", &set);
  AddNGrams({{"capital", "city"}, {"jakarta"}}, "d2", &set);
  CHECK(set.at("capital city").documents == std::set<std::string>{"d1", "d2"});
  CHECK(set.at("jakarta").documents == std::set<std::string>{"d2"});
  CHECK_FALSE(set.count("city jakarta"));
}

TEST_CASE("Example 1 n-grams") {
  NGramSet ngrams = TokenizeNGrams(StripStopwords(kExample1, DefaultStops()));
  CHECK(ngrams.count("dutch east indies"));
  CHECK(ngrams.count("hindu-buddhist kingdoms"));
  CHECK(ngrams.count("capital city"));
  CHECK_FALSE(ngrams.count("island indonesia"));
  // Determinism.
  CHECK(TokenizeNGrams(StripStopwords(kExample1, DefaultStops())) == ngrams);
}

TEST_CASE("partition_terms on Example 1") {
  Ontology o = Ontology::Load(Fixture("java/ontology.tsv"));
  NGramSet ngrams = TokenizeNGrams(StripStopwords(kExample1, DefaultStops()));
  TermPartition p = PartitionTerms(ngrams, o, Gazetteer());
  std::set<std::string> known, missing;
  for (const auto &k : p.known) known.insert(k.ngram.surface);
  for (const auto &m : p.missing) missing.insert(m.surface);
  for (const char *t : {"java", "island", "indonesia", "capital city",
                        "dutch east indies", "jakarta", "130", "2006"}) {
    CHECK_MESSAGE(known.count(t), t);
  }
  CHECK(missing.count("jawa"));
  CHECK(missing.count("hindu-buddhist"));
  CHECK(known.size() + missing.size() == ngrams.size());
  for (const auto &t : known) CHECK_FALSE(missing.count(t));

  CHECK(PartitionTerms({}, o, Gazetteer()).known.empty());
  CHECK(PartitionTerms({}, o, Gazetteer()).missing.empty());

  Gazetteer all;
  for (const auto &[s, g] : ngrams) all.Add(s, "entity");
  TermPartition everything = PartitionTerms(ngrams, o, all);
  CHECK(everything.missing.empty());
  CHECK(everything.known.size() == ngrams.size());
}

TEST_CASE("gazetteer") {
  Gazetteer g = Gazetteer::Parse("# names\nNew  York\tlocation\nFIFA\torganization\n");
  CHECK(g.size() == 2);
  CHECK(g.Lookup("new york") == "location");
  CHECK(g.Lookup("fifa") == "organization");
  CHECK_FALSE(g.Lookup("paris"));
  CHECK_THROWS_AS(Gazetteer::Parse("only-one-field\n"), Error);
}

TEST_CASE("pos_tag") {
  Ontology o = Ontology::Load(Fixture("java/ontology.tsv"));
  auto ngram = [](const std::string &s) {
    return TokenizeNGrams({SplitWhitespace(s)}).at(s);
  };
  CHECK(PosTag(ngram("book"), o) == std::set<std::string>{"noun", "verb"});
  CHECK(PosTag(ngram("island"), o) == std::set<std::string>{"noun"});
  try {
    PosTag(ngram("jawa"), o);
    FAIL("expected a domain error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}

TEST_CASE("corpus directory loading") {
  TempDir dir;
  std::filesystem::create_directories(dir / "animals");
  std::filesystem::create_directories(dir / "sports");
  WriteFile(dir / "animals" / "b.txt", "Okapi lives in the forest.");
  WriteFile(dir / "animals" / "a.txt", "Quokka.");
  WriteFile(dir / "sports" / "x.txt", "Ronaldo.");
  WriteFile(dir / "loose.txt", "Loose text.");
  Corpus c = Corpus::LoadDirectory(dir.path());
  REQUIRE(c.size() == 4);
  CHECK(c.documents()[0].id == "animals/a.txt");
  CHECK(c.documents()[0].domain == "animals");
  CHECK(c.documents()[1].id == "animals/b.txt");
  CHECK(c.documents()[2].id == "loose.txt");
  CHECK(c.documents()[2].domain == "default");
  CHECK(c.documents()[3].domain == "sports");

  Corpus dup;
  dup.Add({"d/1", "d", "text"});
  CHECK_THROWS_AS(dup.Add({"d/1", "d", "other"}), Error);
  CHECK_THROWS_AS(dup.Add({"d/2", "d", "   "}), Error);
  CHECK_THROWS_AS(Corpus::LoadDirectory(dir / "missing"), Error);
}

TEST_CASE("random texts: n-grams respect spans and stopwords") {
  StopList stops = DefaultStops();
  const std::vector<std::string> words = {"the", "of", "java", "island", ",",
                                          "city", "a", "red", "panda", ".",
                                          "is", "big", "(", "x-ray"};
  std::mt19937 rng(11);
  for (int round = 0; round < 500; ++round) {
    std::string text;
    int n = static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) text += words[rng() % words.size()] + " ";
    auto spans = StripStopwords(text, stops);
    NGramSet ngrams = TokenizeNGrams(spans);
    for (const auto &[surface, g] : ngrams) {
      CHECK(g.tokens.size() >= 1);
      CHECK(g.tokens.size() <= kMaxNGramLength);
      CHECK(Join(g.tokens, " ") == surface);
      for (const auto &t : g.tokens) CHECK_FALSE(stops.Contains(t));
      bool inside = false;
      for (const auto &span : spans) {
        inside = inside || std::search(span.begin(), span.end(),
                                       g.tokens.begin(),
                                       g.tokens.end()) != span.end();
      }
      CHECK(inside);
    }
  }
}

}  // namespace
}  // namespace ontoenrich
