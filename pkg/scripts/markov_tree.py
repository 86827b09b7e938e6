"""Print the Markov mutation tree with each triple's surface P(a^2, b^2, c^2)."""
import argparse
from dataclasses import dataclass

from p2stable.markov import enumerate_tree, manetti_wps
from p2stable.quotsing import is_class_T
from p2stable.surfcat import k_squared, wps_singularities


@dataclass
class Config:
    max_entry: int = 1000


def main(cfg: Config):
    tree = enumerate_tree(cfg.max_entry)
    for t in tree.triples:
        s = manetti_wps(t)
        sings = ", ".join(f"{q} (n={is_class_T(q)[1]})" for q in wps_singularities(s)) or "smooth"
        print(f"{str(t):>20}  {s}  K^2={k_squared(s)}  {sings}")
    print()
    for e in tree.edges:
        print(f"{tree.triples[e.parent]} --[slot {e.position}]--> {tree.triples[e.child]}")
    print(f"\n{len(tree.triples)} triples, {len(tree.edges)} edges")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-entry", type=int, default=Config.max_entry)
    main(Config(p.parse_args().max_entry))
