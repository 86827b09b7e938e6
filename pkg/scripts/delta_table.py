"""Tabulate Z_K^2 and the change in K^2 + rho for cyclic quotients of small order.

Lists the orders where some single point has a negative change, next to the
(always nonnegative) sum over the pair 1/r(1,a), 1/r(1,r-a).
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from p2stable.quotsing import CyclicQuotient, canonical, is_class_T, k2rho_change, zk_squared


@dataclass
class Config:
    max_order: int = 12


def main(cfg: Config):
    print(f"{'point':>12} {'Z_K^2':>8} {'change':>8} {'pair sum':>9}  class T")
    seen = set()
    for r in range(2, cfg.max_order + 1):
        for a in range(1, r):
            if gcd(a, r) != 1:
                continue
            s = canonical(CyclicQuotient(r, a))
            if s in seen:
                continue
            seen.add(s)
            pair = k2rho_change(s) + k2rho_change(CyclicQuotient(r, r - a))
            assert pair == 4 * (1 - Fraction(1, r))
            t = is_class_T(s)
            print(f"{str(s):>12} {str(zk_squared(s)):>8} {str(k2rho_change(s)):>8} {str(pair):>9}  {t or ''}")
    negative = [s for s in seen if k2rho_change(s) < 0]
    print(f"\n{len(negative)} of {len(seen)} points have a negative change; every pair sum is 4(1 - 1/r)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-order", type=int, default=Config.max_order)
    main(Config(p.parse_args().max_order))
