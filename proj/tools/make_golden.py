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

"""Writes the golden expert/system judgment files used by the evaluation tests.

Counts per domain are chosen so the harness reproduces published precision
figures; term strings are synthetic.
"""

import argparse
import pathlib

# domain: (expert eliminated, system eliminated, precision)
ELIMINATION = {
    "animals": (4989, 4221, 0.84),
    "programming-languages": (2532, 2108, 0.83),
    "countries-cities": (2891, 2632, 0.91),
    "food-kinds": (956, 783, 0.81),
    "universities": (2578, 2305, 0.89),
    "science": (3015, 2789, 0.92),
    "sports": (3011, 2901, 0.96),
}
# domain: (expert retained, system retained, precision)
RETENTION = {
    "animals": (1030, 1798, 0.57),
    "programming-languages": (877, 1301, 0.67),
    "countries-cities": (1121, 1380, 0.81),
    "food-kinds": (691, 864, 0.79),
    "universities": (762, 1035, 0.73),
    "science": (1138, 1364, 0.83),
    "sports": (213, 323, 0.65),
}
# domain: (system placements, correct placements)
PLACEMENT = {
    "animals": (100, 81),
    "programming-languages": (100, 84),
    "countries-cities": (100, 78),
    "food-kinds": (100, 69),
    "universities": (100, 73),
}
RELATIONS = ["hyponymy", "related-to", "meronymy", "instance-of", "synonymy"]


def overlap(expert, system, precision):
  """Smallest correct count that rounds to the published precision."""
  for correct in range(min(expert, system) + 1):
    if round(correct / system, 2) == precision:
      return correct
  raise ValueError(f"no overlap gives {precision} for {system} system terms")


def verdicts(domain, verdict, tag, expert_n, system_n, precision):
  correct = overlap(expert_n, system_n, precision)
  shared = [f"{domain} {tag} shared {i:05d}" for i in range(correct)]
  expert = shared + [f"{domain} {tag} expert {i:05d}"
                     for i in range(expert_n - correct)]
  system = shared + [f"{domain} {tag} system {i:05d}"
                     for i in range(system_n - correct)]
  line = lambda t: f"E\t{domain}\t{verdict}\t{t}\n"
  return [line(t) for t in expert], [line(t) for t in system]


def placements(domain, total, correct):
  expert, system = [], []
  for i in range(total):
    term = f"{domain} new term {i:03d}"
    target = f"{domain} concept {i % 17:02d}"
    sense = 1 + i % 3
    relation = RELATIONS[i % len(RELATIONS)]
    system.append(f"X\t{domain}\t{term}\t{target}\t{sense}\t{relation}\n")
    if i < correct:
      expert.append(f"X\t{domain}\t{term}\t{target}\t{sense}\t{relation}\n")
    elif i % 2 == 0:
      # Same target, different sense.
      expert.append(
          f"X\t{domain}\t{term}\t{target}\t{sense % 3 + 1}\t{relation}\n")
    else:
      expert.append(
          f"X\t{domain}\t{term}\t{domain} other concept\t{sense}\t{relation}\n")
  return expert, system


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("out_dir", type=pathlib.Path)
  args = parser.parse_args()
  expert, system = [], []
  for domain, row in ELIMINATION.items():
    e, s = verdicts(domain, "eliminated", "elim", *row)
    expert += e
    system += s
  for domain, row in RETENTION.items():
    e, s = verdicts(domain, "retained", "kept", *row)
    expert += e
    system += s
  for domain, row in PLACEMENT.items():
    e, s = placements(domain, *row)
    expert += e
    system += s
  args.out_dir.mkdir(parents=True, exist_ok=True)
  (args.out_dir / "expert.tsv").write_text("".join(expert))
  (args.out_dir / "system.tsv").write_text("".join(system))


if __name__ == "__main__":
  main()
