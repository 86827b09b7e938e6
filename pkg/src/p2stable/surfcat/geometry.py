"""Surface descriptors and their intersection numbers.

Every component is described by a class H with known H^2 and K = k_multiple * H,
so all intersection numbers of K and a double curve q*H are exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Optional, Union

from ..exactmath import DomainError, mod_inverse
from ..quotsing import CyclicQuotient, GermKind

Singularity = Union[CyclicQuotient, GermKind]


@dataclass(frozen=True)
class WPS2:
    """Well-formed weighted projective plane P(w0, w1, w2)."""

    weights: tuple[int, int, int]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != 3 or min(w) < 1:
            raise DomainError(f"need three positive weights, got {self.weights}")
        for i in range(3):
            for j in range(i + 1, 3):
                if gcd(w[i], w[j]) != 1:
                    raise DomainError(f"P{w} is not well formed (weights not pairwise coprime)")
        object.__setattr__(self, "weights", w)

    @property
    def h_squared(self) -> Fraction:
        return Fraction(1, prod(self.weights))

    @property
    def k_multiple(self) -> int:
        return -sum(self.weights)

    @property
    def picard(self) -> int:
        return 1

    @property
    def singularities(self) -> list[CyclicQuotient]:
        return wps_singularities(self)

    def __str__(self):
        if self.weights == (1, 1, 1):
            return "P^2"
        return "P(%d,%d,%d)" % self.weights


@dataclass(frozen=True)
class WPSHypersurface:
    """X_e in P(w0, w1, w2, w3); singularities and Picard number are declared."""

    weights: tuple[int, int, int, int]
    degree: int
    singularities: tuple[Singularity, ...] = ()
    picard: int = 1

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != 4 or min(w) < 1:
            raise DomainError(f"need four positive ambient weights, got {self.weights}")
        if self.degree < 1:
            raise DomainError(f"degree must be positive, got {self.degree}")
        if self.picard < 1:
            raise DomainError(f"Picard number must be positive, got {self.picard}")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "singularities", tuple(self.singularities))

    @property
    def h_squared(self) -> Fraction:
        return Fraction(self.degree, prod(self.weights))

    @property
    def k_multiple(self) -> int:
        return self.degree - sum(self.weights)

    def __str__(self):
        return "X_%d in P(%d,%d,%d,%d)" % ((self.degree,) + self.weights)


@dataclass(frozen=True)
class Declared:
    """A component known only through its numbers, e.g. the elliptic cone of degree 9."""

    k_squared: Fraction
    picard: int
    singularities: tuple[Singularity, ...] = ()
    h_squared: Optional[Fraction] = None
    k_multiple: Optional[Fraction] = None
    name: str = "declared"

    def __post_init__(self):
        object.__setattr__(self, "k_squared", Fraction(self.k_squared))
        object.__setattr__(self, "singularities", tuple(self.singularities))
        if self.h_squared is not None:
            object.__setattr__(self, "h_squared", Fraction(self.h_squared))
        if self.k_multiple is not None:
            object.__setattr__(self, "k_multiple", Fraction(self.k_multiple))
        if self.h_squared is not None and self.k_multiple is not None:
            if self.k_multiple**2 * self.h_squared != self.k_squared:
                raise DomainError(
                    f"{self.name}: K = {self.k_multiple} H with H^2 = {self.h_squared} "
                    f"contradicts K^2 = {self.k_squared}"
                )

    def __str__(self):
        return self.name


Geometry = Union[WPS2, WPSHypersurface, Declared]


def elliptic_cone_degree9() -> Declared:
    from ..quotsing import Kind

    return Declared(
        k_squared=Fraction(9),
        picard=1,
        singularities=(GermKind(Kind.SIMPLE_ELLIPTIC),),
        h_squared=Fraction(9),
        k_multiple=Fraction(-1),
        name="elliptic cone of degree 9",
    )


def k_squared(s: WPS2) -> Fraction:
    """(w0 + w1 + w2)^2 / (w0 w1 w2)."""
    return Fraction(sum(s.weights) ** 2, prod(s.weights))


def hyp_k_squared(h: WPSHypersurface) -> Fraction:
    """(e - sum w)^2 * e / prod w."""
    return Fraction((h.degree - sum(h.weights)) ** 2 * h.degree, prod(h.weights))


def wps_singularities(s: WPS2) -> list[CyclicQuotient]:
    """The vertex singularities: vertex i is 1/w_i(w_j, w_k) = 1/w_i(1, w_j^-1 w_k)."""
    out = []
    for i in range(3):
        wi = s.weights[i]
        if wi == 1:
            continue
        wj, wk = (s.weights[t] for t in range(3) if t != i)
        out.append(CyclicQuotient(wi, mod_inverse(wj % wi, wi) * wk % wi))
    return sorted(out)


def geometry_k_squared(g: Geometry) -> Fraction:
    if isinstance(g, WPS2):
        return k_squared(g)
    if isinstance(g, WPSHypersurface):
        return hyp_k_squared(g)
    return g.k_squared


def geometry_singularities(g: Geometry) -> list[Singularity]:
    if isinstance(g, WPS2):
        return list(wps_singularities(g))
    return list(g.singularities)


@dataclass(frozen=True)
class Component:
    """One irreducible component with an optional double curve q*H on it."""

    geometry: Geometry
    double_curve: Optional[Fraction] = None
    pair_type_data: Optional[object] = None  # classify.PairTypeData
    picard_override: Optional[int] = None

    def __post_init__(self):
        if self.double_curve is not None:
            q = Fraction(self.double_curve)
            if q <= 0:
                raise DomainError(f"double curve multiple must be positive, got {q}")
            object.__setattr__(self, "double_curve", q)

    @property
    def picard(self) -> int:
        if self.picard_override is not None:
            return self.picard_override
        return self.geometry.picard

    @property
    def k_squared(self) -> Fraction:
        return geometry_k_squared(self.geometry)

    @property
    def singularities(self) -> list[Singularity]:
        return geometry_singularities(self.geometry)

    def class_data(self) -> tuple[Fraction, Fraction]:
        """(H^2, k) with K = k H; raises if the geometry does not provide them."""
        g = self.geometry
        h2, k = g.h_squared, g.k_multiple
        if h2 is None or k is None:
            raise DomainError(f"{g}: no hyperplane class data for intersection numbers")
        return Fraction(h2), Fraction(k)

    def k_delta(self) -> Fraction:
        """K_i . Delta_i."""
        h2, k = self.class_data()
        return k * self._q() * h2

    def delta_squared(self) -> Fraction:
        h2, _ = self.class_data()
        return self._q() ** 2 * h2

    def log_k_squared(self) -> Fraction:
        """(K_i + Delta_i)^2."""
        h2, k = self.class_data()
        return (k + self._q()) ** 2 * h2

    def _q(self) -> Fraction:
        if self.double_curve is None:
            raise DomainError(f"{self.geometry}: missing double-curve data")
        return self.double_curve

    def __str__(self):
        return str(self.geometry)
