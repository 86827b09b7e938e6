"""Cyclic quotient singularities 1/r(1,a) and their resolution bookkeeping."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence

from .exactmath import (
    DomainError,
    hj_expand,
    is_negative_definite,
    mod_inverse,
    quadratic_form,
    solve_exact,
)


@dataclass(frozen=True, order=True)
class CyclicQuotient:
    """The quotient singularity 1/r(1,a), stored in canonical form.

    1/r(1,a) and 1/r(1,a') with a' = a^-1 mod r are the same germ (swap the
    coordinates), and the smaller of the two is kept.  ``r = 1`` is a smooth
    point and is stored with ``a = 0``.
    """

    r: int
    a: int

    def __post_init__(self):
        r, a = self.r, self.a
        if r < 1:
            raise DomainError(f"order must be positive, got r={r}")
        if r == 1:
            object.__setattr__(self, "a", 0)
            return
        a %= r
        if gcd(a, r) != 1:
            raise DomainError(f"1/{r}(1,{self.a}): weight not coprime to the order")
        object.__setattr__(self, "a", min(a, mod_inverse(a, r)))

    @property
    def a_inverse(self) -> int:
        return mod_inverse(self.a, self.r) if self.r > 1 else 0

    @property
    def is_smooth(self) -> bool:
        return self.r == 1

    @property
    def index(self) -> int:
        """Smallest N with N*K Cartier: r / gcd(r, a+1)."""
        return self.r // gcd(self.r, self.a + 1)

    def __str__(self):
        return f"1/{self.r}(1,{self.a})" if self.r > 1 else "smooth"

    def to_json(self) -> dict:
        return {"r": self.r, "a": self.a}

    @classmethod
    def from_json(cls, data: dict) -> "CyclicQuotient":
        return cls(int(data["r"]), int(data["a"]))


def canonical(s: CyclicQuotient) -> CyclicQuotient:
    # construction already canonicalizes; kept for symmetry with the data model
    return CyclicQuotient(s.r, s.a)


@dataclass(frozen=True, order=True)
class NCQuotient:
    """The slt germ (xy=0) in 1/r(1,-1,a).

    The two branches are 1/r(1,a) and 1/r(1,-a); swapping x and y turns a
    into -a, so the smaller of a, r-a is stored.
    """

    r: int
    a: int

    def __post_init__(self):
        r, a = self.r, self.a
        if r < 1:
            raise DomainError(f"order must be positive, got r={r}")
        if r == 1:
            object.__setattr__(self, "a", 0)
            return
        a %= r
        if gcd(a, r) != 1:
            raise DomainError(f"(xy=0) in 1/{r}(1,-1,{self.a}): weight not coprime to r")
        object.__setattr__(self, "a", min(a, r - a))

    @property
    def index(self) -> int:
        return self.r

    def branches(self) -> tuple[CyclicQuotient, CyclicQuotient]:
        """The cyclic quotient points the double curve passes through on each side."""
        return CyclicQuotient(self.r, self.a), CyclicQuotient(self.r, -self.a)

    def __str__(self):
        return f"(xy=0) in 1/{self.r}(1,-1,{self.a})"

    def to_json(self) -> dict:
        return {"kind": "nc", "r": self.r, "a": self.a}

    @classmethod
    def from_json(cls, data: dict) -> "NCQuotient":
        return cls(int(data["r"]), int(data["a"]))


class Kind(enum.Enum):
    SMOOTH = "smooth"
    DU_VAL = "du_val"
    T_SINGULARITY = "t"
    CYCLIC_LT = "cyclic_lt"
    NC_QUOTIENT = "nc"
    PINCH_POINT = "pinch_point"
    LC_PAIR_DELTA = "lc_pair_delta"
    LC_PAIR_2DELTA = "lc_pair_2delta"
    DIHEDRAL_DELTA = "dihedral_delta"
    CUSP = "cusp"
    SIMPLE_ELLIPTIC = "simple_elliptic"


# kinds that are not log terminal as surface germs
STRICTLY_LC = frozenset({Kind.CUSP, Kind.SIMPLE_ELLIPTIC})


@dataclass(frozen=True)
class GermKind:
    """A tagged germ type; ``params`` holds (d, n, a) for T-singularities and (r, a) otherwise."""

    kind: Kind
    params: tuple[int, ...] = ()

    def __post_init__(self):
        k, p = self.kind, self.params
        if k is Kind.T_SINGULARITY:
            if len(p) != 3 or gcd(p[2], p[1]) != 1:
                raise DomainError(f"T-singularity needs (d, n, a) with gcd(a, n) = 1: {p}")
        elif k in (Kind.CYCLIC_LT, Kind.NC_QUOTIENT, Kind.LC_PAIR_DELTA, Kind.LC_PAIR_2DELTA):
            if len(p) != 2 or (p[0] > 1 and gcd(p[1], p[0]) != 1):
                raise DomainError(f"{k.value} needs coprime (r, a): {p}")


def germ_kind(s: CyclicQuotient) -> GermKind:
    if s.is_smooth:
        return GermKind(Kind.SMOOTH)
    if s.a == s.r - 1 or s.a_inverse == s.r - 1:
        return GermKind(Kind.DU_VAL, (s.r, s.a))
    t = is_class_T(s)
    if t is not None:
        return GermKind(Kind.T_SINGULARITY, t)
    return GermKind(Kind.CYCLIC_LT, (s.r, s.a))


def resolve(s: CyclicQuotient) -> list[int]:
    """Self-intersections -b_i of the minimal resolution chain."""
    if s.is_smooth:
        return []
    return [-b for b in hj_expand(s.r, s.a)]


def chain_length(s: CyclicQuotient) -> int:
    return len(resolve(s))


def zk_squared(s: CyclicQuotient) -> Fraction:
    """Z_K^2 = E^2 + 4 - (a + a' + 2)/r, the change of K^2 on the minimal resolution.

    E is the sum of the exceptional curves, so E^2 = sum(e_i) + 2(k-1).
    """
    if s.is_smooth:
        return Fraction(0)
    chain = resolve(s)
    e_squared = sum(chain) + 2 * (len(chain) - 1)
    return e_squared + 4 - Fraction(s.a + s.a_inverse + 2, s.r)


def zk_squared_linear(s: CyclicQuotient) -> Fraction:
    """Z_K^2 by solving Z.E_j = 2 - b_j on the chain; agrees with :func:`zk_squared`."""
    chain = resolve(s)
    if not chain:
        return Fraction(0)
    rhs = [2 + e for e in chain]
    coeffs = solve_exact(_chain_matrix(chain), rhs)
    return sum((c * z for c, z in zip(coeffs, rhs)), Fraction(0))  # Z^2 = sum c_j Z.E_j


def k2rho_change(s: CyclicQuotient) -> Fraction:
    """Change of K^2 + rho on passing to the minimal resolution."""
    return zk_squared(s) + chain_length(s)


def _class_T_from(r: int, a: int) -> Optional[tuple[int, int, int]]:
    # smallest d first, i.e. the largest n with n^2 | r
    for n in range(isqrt(r), 0, -1):
        if r % (n * n):
            continue
        d = r // (n * n)
        if (a + 1) % (d * n):
            continue
        k = (a + 1) // (d * n)
        if gcd(k, n) == 1:
            return d, n, (k - 1) % n + 1
    return None


def is_class_T(s: CyclicQuotient) -> Optional[tuple[int, int, int]]:
    """Return (d, n, a) with s = 1/dn^2(1, dna-1) and gcd(a, n) = 1, or None.

    Both representatives of s are tried, the larger one first.
    """
    if s.is_smooth:
        return None
    return _class_T_from(s.r, s.a_inverse) or _class_T_from(s.r, s.a)


def is_p2_admissible(s: CyclicQuotient) -> bool:
    """True for 1/n^2(1, na-1) with 3 not dividing n."""
    t = is_class_T(s)
    return t is not None and t[0] == 1 and t[1] % 3 != 0


def _chain_matrix(chain: Sequence[int]) -> list[list[int]]:
    k = len(chain)
    matrix = [[0] * k for _ in range(k)]
    for i, e in enumerate(chain):
        matrix[i][i] = e
        if i + 1 < k:
            matrix[i][i + 1] = matrix[i + 1][i] = 1
    return matrix


def cycle_matrix(cycle: Sequence[int]) -> list[list[int]]:
    n = len(cycle)
    if n < 3:
        raise DomainError(f"a resolution cycle needs at least 3 curves, got {n}")
    if any(e > -2 for e in cycle):
        raise DomainError(f"cycle self-intersections must be <= -2: {list(cycle)}")
    matrix = [[0] * n for _ in range(n)]
    for i, e in enumerate(cycle):
        matrix[i][i] = e
        matrix[i][(i + 1) % n] += 1
        matrix[(i + 1) % n][i] += 1
    return matrix


def cycle_krel_squared(cycle: Sequence[int]) -> Fraction:
    """K^2 of the minimal resolution of a cusp, relative to the cycle.

    Solves (sum a_i E_i).E_j = -2 - e_j (adjunction) and returns the square.
    """
    matrix = cycle_matrix(cycle)
    if not is_negative_definite(matrix):
        raise DomainError(f"intersection matrix of cycle {list(cycle)} is not negative definite")
    coeffs = solve_exact(matrix, [-2 - e for e in cycle])
    return quadratic_form(matrix, coeffs)


def mu_minus(cycle: Sequence[int], h1: int) -> int:
    """mu_- = 10 h^1(O) + K^2 + b_2 - b_1 for a smoothing of the cusp (b_1 = 1 for a cycle)."""
    if h1 < 0:
        raise DomainError(f"h1 must be nonnegative, got {h1}")
    value = 10 * h1 + cycle_krel_squared(cycle) + len(cycle) - 1
    if value.denominator != 1:
        raise DomainError(f"non-integral mu_- = {value} for cycle {list(cycle)}")
    return int(value)
