"""Curve germs f(x, y) = 0, Newton polygons and the weighted stability criteria.

A germ fails the stable-pair test at degree d when some positive weight
(m, n) has ``3 * wt(f) >= d * (m + n)``.  The defect
``phi(m, n) = 3 * wt - d * (m + n)`` is a minimum of linear forms, hence
concave and positively homogeneous, so its sign on the open quadrant is
decided by finitely many rays: the inner normals of the Newton polygon,
the diagonal (1, 1), and the two limiting directions (1, 0), (0, 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional

from .exactmath import DomainError, rational_str, to_rational

Monomial = tuple[int, int]


@dataclass(frozen=True)
class CurveGerm:
    """Finite sum of ``c * x**i * y**j``; zero coefficients are dropped."""

    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), c in dict(self.terms).items():
            if i < 0 or j < 0:
                raise DomainError(f"negative exponent in monomial ({i}, {j})")
            c = to_rational(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @property
    def support(self) -> list[Monomial]:
        return list(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, CurveGerm) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "CurveGerm") -> "CurveGerm":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CurveGerm(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.terms.items():
            mono = "*".join(
                s for s in (_power("x", i), _power("y", j)) if s
            )
            if not mono:
                parts.append(rational_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rational_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"i": i, "j": j, "c": rational_str(c)} for (i, j), c in self.terms.items()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "CurveGerm":
        terms: dict[Monomial, Fraction] = {}
        for t in data["terms"]:
            key = (int(t["i"]), int(t["j"]))
            terms[key] = terms.get(key, 0) + to_rational(t.get("c", 1))
        return cls(terms)


def _power(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def germ(*terms: tuple[int, int, object]) -> CurveGerm:
    """Shorthand: ``germ((0, 2, 1), (13, 0, 1))`` is y^2 + x^13."""
    return CurveGerm({(i, j): to_rational(c) for i, j, c in terms})


@dataclass(frozen=True, order=True)
class WeightVector:
    """Positive weights (m, n), stored primitive."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DomainError(f"weights must be positive, got ({self.m}, {self.n})")
        g = gcd(self.m, self.n)
        object.__setattr__(self, "m", self.m // g)
        object.__setattr__(self, "n", self.n // g)

    def as_tuple(self) -> tuple[int, int]:
        return (self.m, self.n)


def weight(g: CurveGerm, w) -> int:
    """wt(f) = min(m*i + n*j) over the support."""
    if g.is_zero:
        raise DomainError("weight of the zero germ is undefined")
    m, n = w.as_tuple() if isinstance(w, WeightVector) else w
    return min(m * i + n * j for i, j in g.terms)


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: list[Monomial]
    edge_normals: list[WeightVector]


def newton_polygon(g: CurveGerm) -> NewtonPolygon:
    """Vertices (i increasing, j decreasing) of the compact boundary of conv(supp + R^2_+)."""
    if g.is_zero:
        raise DomainError("Newton polygon of the zero germ is undefined")
    lowest: dict[int, int] = {}
    for i, j in g.terms:
        lowest[i] = min(j, lowest.get(i, j))
    hull: list[Monomial] = []
    for p in sorted(lowest.items()):
        if hull and p[1] >= hull[-1][1]:
            continue  # dominated by a point to its left
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    normals = []
    for (i1, j1), (i2, j2) in zip(hull, hull[1:]):
        normals.append(WeightVector(j1 - j2, i2 - i1))
    return NewtonPolygon(hull, normals)


def _cross(o: Monomial, a: Monomial, b: Monomial) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def defect(g: CurveGerm, d: int, w) -> int:
    """3 * wt(f) - d * (m + n); the criterion needs this to be negative."""
    m, n = w.as_tuple() if isinstance(w, WeightVector) else w
    return min((3 * i - d) * m + (3 * j - d) * n for i, j in g.terms)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    degree: int
    witness: Optional[WeightVector] = None
    weight: Optional[int] = None
    label: str = "stable pair test"

    @property
    def bound(self) -> Optional[Fraction]:
        """(d/3)(m + n) at the witness."""
        if self.witness is None:
            return None
        return Fraction(self.degree, 3) * (self.witness.m + self.witness.n)

    def __str__(self):
        if self.passed:
            return f"{self.label}: PASS (degree {self.degree})"
        w = self.witness
        return (
            f"{self.label}: FAIL (degree {self.degree}) witness ({w.m},{w.n}): "
            f"wt = {self.weight} >= {rational_str(self.bound)} = {self.degree}/3*({w.m}+{w.n})"
        )

    def to_json(self) -> dict:
        out = {"test": self.label, "degree": self.degree, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = list(self.witness.as_tuple())
            out["weight"] = self.weight
            out["bound"] = rational_str(self.bound)
        return out


def _limit_witness(g: CurveGerm, d: int, along_x: bool) -> WeightVector:
    """Smallest k with defect >= 0 at (k, 1) (along_x) or (1, k)."""

    def ray(k):
        return (k, 1) if along_x else (1, k)

    hi = 1
    while defect(g, d, ray(hi)) < 0:
        hi *= 2
    lo = hi // 2 + 1 if hi > 1 else 1
    while lo < hi:
        mid = (lo + hi) // 2
        if defect(g, d, ray(mid)) >= 0:
            hi = mid
        else:
            lo = mid + 1
    return WeightVector(*ray(hi))


def weighted_test(g: CurveGerm, d: int, label: str = "stable pair test") -> Verdict:
    """Decide ``wt(f) < (d/3)(m+n)`` for every positive (m, n) by the finite ray check."""
    if g.is_zero:
        raise DomainError("the zero germ has no weight")
    rays = list(dict.fromkeys(newton_polygon(g).edge_normals + [WeightVector(1, 1)]))
    bad = [w for w in rays if defect(g, d, w) >= 0]
    if bad:
        # maximize the normalized defect; ties go to the smaller weight
        best = max(bad, key=lambda w: (Fraction(defect(g, d, w), w.m + w.n), -(w.m + w.n), w.as_tuple()))
        return Verdict(False, d, best, weight(g, best), label)
    for along_x, limit in ((True, (1, 0)), (False, (0, 1))):
        if defect(g, d, limit) > 0:
            w = _limit_witness(g, d, along_x)
            return Verdict(False, d, w, weight(g, w), label)
    return Verdict(True, d, label=label)


def stable_pair_local_test(g: CurveGerm, d: int) -> Verdict:
    """Local stable-pair criterion at the origin, in the given analytic coordinates."""
    return weighted_test(g, d, "stable pair test")


def git_weight_test(g: CurveGerm, d: int) -> Verdict:
    """The same numerical check at one flag, for the dehomogenization of a degree-d form."""
    if not g.is_zero and g.total_degree() > d:
        raise DomainError(f"support has total degree {g.total_degree()} > {d}")
    return weighted_test(g, d, "GIT test at this flag")


def brute_force_test(g: CurveGerm, d: int, bound: int = 60) -> Optional[WeightVector]:
    """First primitive (m, n) with m, n <= bound violating the criterion, or None."""
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            if gcd(m, n) == 1 and defect(g, d, (m, n)) >= 0:
                return WeightVector(m, n)
    return None


# -- coordinate changes ---------------------------------------------------------


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def substitute(g: CurveGerm, shift: Mapping[int, object], order: Optional[int] = None) -> CurveGerm:
    """Apply x -> x, y -> y + p(x) with ``p = sum(shift[k] * x**k)``.

    Terms of total degree above ``order`` are dropped when it is given.
    """
    p = {(k, 0): to_rational(c) for k, c in shift.items() if to_rational(c)}
    if not p:
        return _truncate(g, order)
    base = dict(p)
    base[(0, 1)] = base.get((0, 1), 0) + 1  # y + p(x)
    powers = [{(0, 0): Fraction(1)}]
    out: dict = {}
    for (i, j), c in g.terms.items():
        while len(powers) <= j:
            powers.append(_trim(_poly_mul(powers[-1], base), order))
        for (a, b), e in powers[j].items():
            key = (a + i, b)
            out[key] = out.get(key, 0) + c * e
    return _truncate(CurveGerm(out), order)


def _trim(poly: dict, order: Optional[int]) -> dict:
    if order is None:
        return poly
    return {k: v for k, v in poly.items() if k[0] + k[1] <= order}


def _truncate(g: CurveGerm, order: Optional[int]) -> CurveGerm:
    if order is None:
        return g
    return CurveGerm({k: v for k, v in g.terms.items() if k[0] + k[1] <= order})


def complete_square(g: CurveGerm, max_order: int) -> tuple[CurveGerm, dict[int, Fraction]]:
    """Remove the monomials x^k y, 1 <= k <= max_order, by shifts y -> y - c x^k.

    Needs a nonzero y^2 coefficient.  Returns the new germ and the total shift
    p(x) (as ``{k: coeff}``) such that ``substitute(g, p)`` is the result.
    Each shift only creates x^k' y terms with k' > k, so one pass suffices.
    """
    alpha = g.coefficient(0, 2)
    if not alpha:
        raise DomainError("complete_square needs a nonzero y^2 coefficient")
    total: dict[int, Fraction] = {}
    current = g
    for k in range(1, max_order + 1):
        c = current.coefficient(k, 1)
        if not c:
            continue
        step = {k: -c / (2 * alpha)}
        current = substitute(current, step)
        total[k] = total.get(k, 0) + step[k]
    return current, {k: v for k, v in total.items() if v}


def invert_shift(shift: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {k: -to_rational(v) for k, v in shift.items()}


def rescale(g: CurveGerm, lam, mu) -> CurveGerm:
    """x -> lam x, y -> mu y."""
    lam, mu = to_rational(lam), to_rational(mu)
    if not lam or not mu:
        raise DomainError("rescaling factors must be nonzero")
    return CurveGerm({(i, j): c * lam**i * mu**j for (i, j), c in g.terms.items()})


# -- index conditions -----------------------------------------------------------


def index_congruence_a(n: int, a: int, d: int, g: CurveGerm) -> bool:
    """Every monomial of the cover germ satisfies 3(i + (na-1)j) = dna mod n^2."""
    if n < 1 or gcd(a, n) != 1:
        raise DomainError(f"need n >= 1 and gcd(a, n) = 1, got n={n}, a={a}")
    mod = n * n
    target = (d * n * a) % mod
    return all((3 * (i + (n * a - 1) * j)) % mod == target for i, j in g.terms)


def index_congruence_b(r: int, d: int, k: int) -> bool:
    """k < d/3 and 3k = d mod r, for D restricted to the double curve at an NC quotient."""
    if r < 1 or k < 0:
        raise DomainError(f"need r >= 1 and k >= 0, got r={r}, k={k}")
    return 3 * k < d and (3 * k - d) % r == 0
