# Copyright 2026 The Ontoenrich Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the bundled desk corpus, its ontology and its gazetteer.

Seven domains of short synthetic articles. Each article mentions a few terms
the ontology lacks next to concepts it defines, sometimes in a sentence that
matches a lexical pattern. Output is fully determined by the seed.
"""

import argparse
import pathlib
import random

# Concept hierarchy shared by all domains: child -> parent. Multi-sense
# labels are written "label#sense".
HIERARCHY = {
    "animal": "organism", "plant": "organism", "organism": "entity",
    "mammal": "animal", "bird": "animal", "reptile": "animal",
    "fish": "animal", "insect": "animal", "amphibian": "animal",
    "snake": "reptile", "python#1": "snake", "bass#1": "fish",
    "predator": "animal", "habitat": "location", "forest": "habitat",
    "savanna": "habitat", "river": "habitat", "ocean": "habitat",
    "location": "entity", "region": "location", "country": "region",
    "city": "region", "capital city": "city", "island": "region",
    "java#1": "island", "continent": "region",
    "language": "communication", "communication": "abstraction",
    "abstraction": "entity", "programming language": "language",
    "python#2": "programming language", "java#2": "programming language",
    "compiler": "program", "program": "software", "software": "artifact",
    "library": "software", "artifact": "entity", "computer": "machine",
    "machine": "artifact", "food": "substance", "substance": "entity",
    "dish": "food", "fruit": "food", "vegetable": "food", "bread": "food",
    "cheese": "food", "spice": "food", "coffee": "beverage",
    "java#3": "coffee", "beverage": "food", "sauce": "food",
    "university": "institution", "institution": "organization",
    "organization": "group", "group": "abstraction", "college": "institution",
    "faculty": "organization", "student": "person", "professor": "person",
    "person": "organism", "degree": "award", "award": "abstraction",
    "science": "knowledge", "knowledge": "abstraction",
    "physics": "science", "chemistry": "science", "biology": "science",
    "theory": "knowledge", "experiment": "activity", "activity": "act",
    "act": "event", "event": "entity", "particle": "substance",
    "molecule": "substance", "cell": "organism", "sport": "activity",
    "football#1": "sport", "football#2": "ball", "ball": "equipment",
    "equipment": "artifact", "tennis": "sport", "basketball": "sport",
    "team": "group", "player": "person", "coach": "person",
    "stadium": "building", "building": "artifact", "court#1": "area",
    "area": "location", "court#2": "institution", "bass#2": "instrument",
    "instrument": "artifact", "league": "organization", "match": "event",
    "career": "activity", "europe": "continent", "asia": "continent",
    "africa": "continent", "entity": None,
}

# domain: list of (missing term, parent label, relation, related labels)
MISSING = {
    "animals": [
        ("okapi", "mammal", "hyponymy", ["forest", "africa", "mammal"]),
        ("red panda", "mammal", "hyponymy", ["forest", "asia", "mammal"]),
        ("quokka", "mammal", "hyponymy", ["island", "mammal"]),
        ("axolotl", "amphibian", "hyponymy", ["river", "amphibian"]),
        ("pangolin", "mammal", "hyponymy", ["savanna", "africa", "predator"]),
        ("kakapo", "bird", "hyponymy", ["forest", "island", "bird"]),
        ("narwhal", "mammal", "hyponymy", ["ocean", "mammal"]),
        ("shoebill", "bird", "hyponymy", ["river", "africa", "bird"]),
        ("gharial", "reptile", "hyponymy", ["river", "asia", "reptile"]),
        ("reticulated python", "python", "hyponymy", ["snake", "forest"]),
        ("striped bass", "bass", "hyponymy", ["fish", "river", "ocean"]),
        ("tusk", "narwhal", None, ["mammal", "ocean"]),
    ],
    "programming-languages": [
        ("rust", "programming language", "hyponymy",
         ["compiler", "software", "programming language"]),
        ("haskell", "programming language", "hyponymy",
         ["compiler", "theory", "programming language"]),
        ("django", "library", "hyponymy", ["python", "software", "library"]),
        ("numpy", "library", "hyponymy", ["python", "science", "library"]),
        ("bytecode", "program", None, ["java", "compiler", "machine"]),
        ("garbage collector", "program", "meronymy",
         ["java", "software", "compiler"]),
        ("spring framework", "library", "hyponymy", ["java", "software"]),
        ("interpreter", "program", "hyponymy", ["python", "computer"]),
    ],
    "countries-cities": [
        ("jakarta", "capital city", "hyponymy", ["indonesia", "java", "city"]),
        ("surabaya", "city", "hyponymy", ["java", "indonesia", "city"]),
        ("bandung", "city", "hyponymy", ["java", "island", "city"]),
        ("jawa", "java", None, ["island", "indonesia"]),
        ("hindu-buddhist", "indonesia", None, ["java", "island"]),
        ("lagos", "city", "hyponymy", ["africa", "country", "city"]),
        ("kyoto", "city", "hyponymy", ["asia", "capital city", "city"]),
        ("tasmania", "island", "hyponymy", ["island", "continent"]),
    ],
    "food-kinds": [
        ("kimchi", "dish", "hyponymy", ["vegetable", "spice", "asia"]),
        ("tempeh", "food", "hyponymy", ["java", "dish", "food"]),
        ("sourdough", "bread", "hyponymy", ["bread", "europe"]),
        ("gorgonzola", "cheese", "hyponymy", ["cheese", "europe"]),
        ("sambal", "sauce", "hyponymy", ["spice", "sauce", "asia"]),
        ("durian", "fruit", "hyponymy", ["fruit", "asia", "island"]),
        ("arabica", "coffee", "hyponymy", ["coffee", "beverage", "java"]),
        ("saffron", "spice", "hyponymy", ["spice", "dish"]),
    ],
    "universities": [
        ("sorbonne", "university", "instance-of", ["europe", "faculty"]),
        ("oxford", "university", "instance-of", ["europe", "college"]),
        ("doctorate", "degree", "hyponymy", ["degree", "professor"]),
        ("tenure", "professor", None, ["professor", "faculty"]),
        ("alumni association", "organization", "hyponymy",
         ["student", "university"]),
        ("dean", "faculty", "meronymy", ["faculty", "professor"]),
        ("campus", "university", "meronymy", ["university", "building"]),
    ],
    "science": [
        ("quark", "particle", "hyponymy", ["physics", "particle"]),
        ("boson", "particle", "hyponymy", ["physics", "theory", "particle"]),
        ("enzyme", "molecule", "hyponymy", ["biology", "cell", "molecule"]),
        ("isotope", "particle", None, ["chemistry", "physics"]),
        ("mitochondrion", "cell", "meronymy", ["cell", "biology"]),
        ("spectroscopy", "experiment", "hyponymy", ["chemistry", "physics"]),
        ("entropy", "theory", None, ["physics", "chemistry"]),
    ],
    "sports": [
        ("ronaldo", "football", None, ["football", "career", "europe", "sport"]),
        ("messi", "football", None, ["football", "player", "career"]),
        ("wimbledon", "tennis", None, ["tennis", "court", "europe"]),
        ("premier league", "league", "hyponymy", ["football", "team"]),
        ("goalkeeper", "player", "hyponymy", ["football", "team", "player"]),
        ("slam dunk", "basketball", None, ["basketball", "court"]),
        ("penalty kick", "football", None, ["football", "match"]),
        ("midfielder", "player", "hyponymy", ["football", "team", "player"]),
    ],
}

GAZETTEER = [
    ("indonesia", "location"), ("london", "location"), ("paris", "location"),
    ("madrid", "location"), ("tokyo", "location"), ("nairobi", "location"),
    ("fifa", "organization"), ("unesco", "organization"),
]

PATTERN = {
    "hyponymy": "{m} is {a} {p}.",
    "meronymy": "The {m} is part of the {p}.",
    "instance-of": "{m} is an instance of {a} {p}.",
}

CONTEXT = [
    "Reports about {m} often mention {c}.",
    "The {m} and the {c} appear together in many studies.",
    "Visitors who know {c} soon learn about {m}.",
    "Writers compare {m} with {c}.",
    "Near {c}, the {m} is well known.",
    "Every guide to {c} has a chapter on {m}.",
]

FILLER = [
    "Local records describe {c} in detail.",
    "Recent surveys counted each {c} twice.",
    "Experts still debate {c} and {d}.",
    "The history of {c} is long.",
    "Travelers visit {d} to see {c}.",
    "In {g}, people talk about {c}.",
]


def label(concept):
  return concept.split("#")[0]


def write_ontology(path):
  senses = {}
  for child in HIERARCHY:
    name = label(child)
    sense = int(child.split("#")[1]) if "#" in child else 1
    senses[name] = max(senses.get(name, 0), sense)
  ids = {name: name.replace(" ", "_") for name in senses}
  lines = ["# Desk ontology for the bundled corpus.\n"]
  for name in sorted(senses):
    lines.append(f"C\t{ids[name]}\t{name}\t{senses[name]}\tnoun\n")
  for child, parent in sorted(HIERARCHY.items()):
    if parent is None:
      continue
    ref = ids[label(child)] + ("#" + child.split("#")[1] if "#" in child
                               else "")
    lines.append(f"A\thypernymy\t{ids[parent]}\t{ref}\toriginal\n")
  path.write_text("".join(lines))
  return sorted(senses)


def article(rng, domain, concepts):
  entries = MISSING[domain]
  chosen = rng.sample(entries, k=min(len(entries), rng.randint(1, 3)))
  places = [g for g, kind in GAZETTEER if kind == "location"]
  sentences = []
  for term, parent, relation, related in chosen:
    if relation in PATTERN and rng.random() < 0.6:
      article = "an" if parent[0] in "aeiou" else "a"
      sentences.append(PATTERN[relation].format(m=term, a=article, p=parent))
    for _ in range(rng.randint(2, 4)):
      template = rng.choice(CONTEXT)
      sentences.append(template.format(m=term, c=rng.choice(related)))
  for _ in range(rng.randint(3, 6)):
    template = rng.choice(FILLER)
    sentences.append(template.format(c=rng.choice(concepts),
                                     d=rng.choice(concepts),
                                     g=rng.choice(places)))
  rng.shuffle(sentences)
  text = " ".join(s[0].upper() + s[1:] for s in sentences)
  return text + "\n"


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("out_dir", type=pathlib.Path)
  parser.add_argument("--documents", type=int, default=500)
  parser.add_argument("--seed", type=int, default=2012)
  args = parser.parse_args()
  rng = random.Random(args.seed)
  corpus = args.out_dir / "corpus"
  corpus.mkdir(parents=True, exist_ok=True)
  concepts = write_ontology(args.out_dir / "ontology.tsv")
  (args.out_dir / "gazetteer.tsv").write_text(
      "".join(f"{s}\t{k}\n" for s, k in GAZETTEER))
  domains = sorted(MISSING)
  for i in range(args.documents):
    domain = domains[i % len(domains)]
    (corpus / domain).mkdir(exist_ok=True)
    (corpus / domain / f"doc{i:04d}.txt").write_text(
        article(rng, domain, concepts))


if __name__ == "__main__":
  main()
