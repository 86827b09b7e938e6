"""Compare the finite Newton-polygon decision with exhaustive weight search."""
import argparse
import random
import time
from dataclasses import dataclass, fields
from fractions import Fraction

from p2stable.curvewt import CurveGerm, brute_force_test, stable_pair_local_test


@dataclass
class Config:
    seed: int = 0
    samples: int = 2000
    max_exponent: int = 30
    max_terms: int = 6
    min_degree: int = 4
    max_degree: int = 40
    bound: int = 60


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    agree = fails = 0
    start = time.perf_counter()
    for _ in range(cfg.samples):
        n_terms = rng.randint(1, cfg.max_terms)
        terms = {
            (rng.randint(0, cfg.max_exponent), rng.randint(0, cfg.max_exponent)): Fraction(rng.randint(1, 9))
            for _ in range(n_terms)
        }
        g, d = CurveGerm(terms), rng.randint(cfg.min_degree, cfg.max_degree)
        fast = stable_pair_local_test(g, d).passed
        slow = brute_force_test(g, d, cfg.bound) is None
        agree += fast == slow
        fails += not fast
        if fast != slow:
            print(f"disagreement: d={d} germ={g}")
    elapsed = time.perf_counter() - start
    print(f"{agree}/{cfg.samples} agree, {fails} failing germs, {elapsed:.1f}s")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    for f in fields(Config):
        p.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    main(Config(**vars(p.parse_args())))
