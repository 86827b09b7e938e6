"""Pair types I-IV of (Y, C) and the coarse types A/B/B*/C/D of glued surfaces."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exactmath import DomainError
from ..quotsing import STRICTLY_LC, CyclicQuotient, GermKind, NCQuotient
from .geometry import Component


class PairType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    INVALID = "invalid"


class CoarseType(enum.Enum):
    A = "A"
    B = "B"
    BSTAR = "Bstar"
    C = "C"
    D = "D"
    INVALID = "invalid"


class Contribution(enum.Enum):
    """Germs of (Y, C) along a boundary curve and what they add to Diff(Y, Gamma)."""

    DELTA = "delta"  # (1/r(1,a), Delta): log terminal, adds 1 - 1/r
    DOUBLE_DELTA = "2delta"  # (1/r(1,a), 2 Delta): adds 1
    DIHEDRAL = "dihedral"  # (D, Delta): adds 1


@dataclass(frozen=True)
class BoundaryGerm:
    kind: Contribution
    r: int = 1

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"index must be positive, got r={self.r}")

    @property
    def value(self) -> Fraction:
        if self.kind is Contribution.DELTA:
            return 1 - Fraction(1, self.r)
        return Fraction(1)


@dataclass(frozen=True)
class BoundaryCurve:
    """A component Gamma of C with its germs and (C - Gamma).Gamma."""

    genus: int = 0
    germs: tuple[BoundaryGerm, ...] = ()
    meets_rest: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "germs", tuple(self.germs))
        object.__setattr__(self, "meets_rest", Fraction(self.meets_rest))
        if self.meets_rest < 0:
            raise DomainError("(C - Gamma).Gamma must be nonnegative")

    def diff_plus_rest(self) -> Fraction:
        """Diff(Y, Gamma) + (C - Gamma).Gamma; (K + C).Gamma is this minus 2."""
        return sum((g.value for g in self.germs), Fraction(0)) + self.meets_rest


@dataclass(frozen=True)
class PairTypeData:
    curves: tuple[BoundaryCurve, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))


def pair_type(p: Optional[PairTypeData]) -> PairType:
    if p is None or not p.curves:
        return PairType.I
    for c in p.curves:
        if c.genus > 0 or c.diff_plus_rest() >= 2:
            return PairType.INVALID
    kinds = [Counter(g.kind for g in c.germs) for c in p.curves]
    if len(p.curves) == 1:
        (c,), (k,) = p.curves, kinds
        if c.meets_rest or k[Contribution.DOUBLE_DELTA]:
            return PairType.INVALID
        if k[Contribution.DIHEDRAL] == 1:
            return PairType.IV
        if k[Contribution.DIHEDRAL] == 0:
            return PairType.II
        return PairType.INVALID
    if len(p.curves) == 2:
        if any(k[Contribution.DIHEDRAL] for k in kinds):
            return PairType.INVALID
        # the two curves must meet, at a node or at a (1/r, 2 Delta) point
        if all(c.meets_rest > 0 or k[Contribution.DOUBLE_DELTA] for c, k in zip(p.curves, kinds)):
            return PairType.III
    return PairType.INVALID


@dataclass(frozen=True)
class Gluing:
    """Identify boundary piece ``first`` with ``second``; ``second=None`` folds ``first``.

    Pieces are (component index, boundary curve index).
    """

    first: tuple[int, int]
    second: Optional[tuple[int, int]] = None

    @property
    def folded(self) -> bool:
        return self.second is None


@dataclass(frozen=True)
class GluedSurface:
    components: tuple[Component, ...]
    gluing: tuple[Gluing, ...] = ()
    nc_quotients: tuple[NCQuotient, ...] = ()
    degree: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "gluing", tuple(self.gluing))
        object.__setattr__(self, "nc_quotients", tuple(self.nc_quotients))
        if not self.components:
            raise DomainError("a surface needs at least one component")
        used: set[tuple[int, int]] = set()
        for g in self.gluing:
            pieces = [g.first] if g.second is None else [g.first, g.second]
            for ci, gi in pieces:
                if not 0 <= ci < len(self.components):
                    raise DomainError(f"gluing refers to missing component {ci}")
                if gi < 0 or gi >= len(self.curves_of(ci)):
                    raise DomainError(f"component {ci} has no boundary curve {gi}")
                if (ci, gi) in used:
                    raise DomainError(f"boundary piece {(ci, gi)} is glued twice")
                used.add((ci, gi))

    def curves_of(self, i: int) -> tuple[BoundaryCurve, ...]:
        data = self.components[i].pair_type_data
        return data.curves if data is not None else ()

    def pieces(self) -> set[tuple[int, int]]:
        return {(i, j) for i in range(len(self.components)) for j in range(len(self.curves_of(i)))}

    def __str__(self):
        return " u ".join(str(c) for c in self.components)


def single(component: Component, degree: Optional[int] = None) -> GluedSurface:
    return GluedSurface((component,), degree=degree)


def type_b_surface(first: Component, second: Component, nc_quotients=(), degree=None) -> GluedSurface:
    """Two components glued along their double curves, each of pair type II.

    Each NC quotient point with r > 1 adds a (1/r, Delta) germ on both sides.
    """
    nc = tuple(nc_quotients)
    curve = BoundaryCurve(
        0, tuple(BoundaryGerm(Contribution.DELTA, q.r) for q in nc if q.r > 1), Fraction(0)
    )
    data = PairTypeData((curve,))
    comps = tuple(
        Component(c.geometry, c.double_curve, c.pair_type_data or data, c.picard_override)
        for c in (first, second)
    )
    return GluedSurface(comps, (Gluing((0, 0), (1, 0)),), nc, degree)


def coarse_type(g: GluedSurface) -> CoarseType:
    types = [pair_type(c.pair_type_data) for c in g.components]
    if PairType.INVALID in types:
        return CoarseType.INVALID
    used = set()
    for gl in g.gluing:
        used.add(gl.first)
        if gl.second is not None:
            used.add(gl.second)
    if used != g.pieces():
        return CoarseType.INVALID  # every boundary piece must be glued exactly once
    n = len(g.components)
    folds = Counter(gl.first[0] for gl in g.gluing if gl.folded)
    links = [(gl.first[0], gl.second[0]) for gl in g.gluing if not gl.folded]

    if n == 1 and types == [PairType.I]:
        return CoarseType.A
    if PairType.I in types:
        return CoarseType.INVALID
    if n == 2 and types == [PairType.II, PairType.II] and not folds and len(links) == 1:
        if set(links[0]) == {0, 1}:
            return CoarseType.B
        return CoarseType.INVALID
    if n == 1 and types == [PairType.II] and folds[0] == 1:
        return CoarseType.BSTAR
    degree = Counter()
    for a, b in links:
        degree[a] += 1
        degree[b] += 1
    connected = _connected(n, links)
    if all(t is PairType.III for t in types) and not folds:
        if connected and len(links) == n and all(degree[i] == 2 for i in range(n)):
            return CoarseType.C
        return CoarseType.INVALID
    if set(types) <= {PairType.III, PairType.IV} and connected and len(links) == n - 1:
        if _is_fan(n, types, folds, degree):
            return CoarseType.D
    return CoarseType.INVALID


def _is_fan(n, types, folds, degree) -> bool:
    # a path: interior components are type III glued on both curves, no folds;
    # each end is type IV, or type III with its outer curve folded
    if n > 1 and sorted(degree[i] for i in range(n)).count(1) != 2:
        return False
    for i in range(n):
        end = n == 1 or degree[i] == 1
        if not end:
            if types[i] is not PairType.III or folds[i] or degree[i] != 2:
                return False
            continue
        open_pieces = 2 if n == 1 else 1  # boundary pieces not used by the path
        if types[i] is PairType.IV:
            need = 1 if n == 1 else 0
        else:
            need = open_pieces
        if folds[i] != need:
            return False
    return True


def _connected(n: int, links) -> bool:
    adj = {i: set() for i in range(n)}
    for a, b in links:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for j in adj[stack.pop()] - seen:
            seen.add(j)
            stack.append(j)
    return len(seen) == n


def is_log_terminal(s) -> bool:
    if isinstance(s, (CyclicQuotient, NCQuotient)):
        return True
    if isinstance(s, GermKind):
        return s.kind not in STRICTLY_LC
    raise DomainError(f"unknown singularity {s!r}")


def slt_constraint(d: int, g: GluedSurface) -> bool:
    """For 3 not dividing d only slt surfaces occur: log terminal type A, or type B."""
    if d < 4:
        raise DomainError(f"degree must be >= 4, got {d}")
    if d % 3 == 0:
        return True
    kind = coarse_type(g)
    if kind is CoarseType.B:
        return True
    if kind is CoarseType.A:
        return all(is_log_terminal(s) for s in g.components[0].singularities)
    return False
