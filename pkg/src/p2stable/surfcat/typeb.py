"""Numerical conditions on type B surfaces and the Noether-formula audits."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactmath import DomainError
from ..quotsing import (
    CyclicQuotient,
    NCQuotient,
    chain_length,
    is_class_T,
    zk_squared,
)
from .classify import CoarseType, GluedSurface, coarse_type
from .geometry import Component


def glued_k_squared(g: GluedSurface) -> Fraction:
    """K_X^2 = sum (K_i + Delta_i)^2 over the components."""
    return sum((c.log_k_squared() for c in g.components), Fraction(0))


def _require_b(g: GluedSurface):
    if coarse_type(g) is not CoarseType.B:
        raise DomainError(f"{g} is not a surface of type B")


def t1_degree(g: GluedSurface) -> Fraction:
    """Delta_1^2 + Delta_2^2, the degree of T^1 on the double curve."""
    _require_b(g)
    return sum((c.delta_squared() for c in g.components), Fraction(0))


def delta_squares(rho1: int, rho2: int) -> int:
    """3 - (rho1 + rho2): the value Delta_1^2 + Delta_2^2 must take."""
    if rho1 < 1 or rho2 < 1:
        raise DomainError(f"Picard numbers must be positive, got ({rho1}, {rho2})")
    return 3 - (rho1 + rho2)


def interior_singularities(g: GluedSurface) -> tuple[list, list[str]]:
    """Singularities off the double curve, plus any bookkeeping problems.

    Each NC quotient (xy=0) in 1/r(1,-1,a) with r > 1 accounts for a point
    1/r(1,a) on one component and 1/r(1,-a) on the other; those are removed
    from the component lists (as multisets) and what remains is interior.
    """
    pools = [Counter(c.singularities) for c in g.components]
    problems = []
    for q in g.nc_quotients:
        if q.r == 1:
            continue
        if len(pools) != 2:
            problems.append(f"{q}: NC quotient points need exactly two components")
            continue
        s, t = q.branches()
        for first, second in ((s, t), (t, s)):
            if pools[0][first] and pools[1][second]:
                pools[0][first] -= 1
                pools[1][second] -= 1
                break
        else:
            problems.append(f"{q}: components lack the matching points {s} / {t}")
    interior = sorted(
        (s for pool in pools for s in pool.elements()), key=_sort_key
    )
    return interior, problems


def surface_singularities(g: GluedSurface) -> list:
    """The singularity list as tables give it: interior points and NC quotients with r > 1."""
    interior, _ = interior_singularities(g)
    nc = [q for q in g.nc_quotients if q.r > 1]
    return sorted(interior + nc, key=_sort_key)


def _sort_key(s):
    if isinstance(s, CyclicQuotient):
        return (0, s.r, s.a, "")
    if isinstance(s, NCQuotient):
        return (1, s.r, s.a, "")
    return (2, 0, 0, s.kind.value)


@dataclass
class ConditionReport:
    """Per-condition outcome of :func:`type_b_smoothable`."""

    conditions: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.conditions) and all(self.conditions.values())

    def __bool__(self):
        return self.ok


def type_b_smoothable(g: GluedSurface) -> ConditionReport:
    """The three numerical conditions for a type B surface to smooth to the plane.

    (1) singularities are 1/n^2(1,na-1) or NC quotients, at most two of the
        latter with r > 1; (2) K^2 = 9; (3) {rho_1, rho_2} is {1} or {1, 2}.
    """
    rep = ConditionReport()
    if coarse_type(g) is not CoarseType.B:
        rep.conditions["type B"] = False
        rep.details["type B"] = f"coarse type is {coarse_type(g).value}"
        return rep
    interior, problems = interior_singularities(g)
    bad = []
    for s in interior:
        t = is_class_T(s) if isinstance(s, CyclicQuotient) else None
        if t is None or t[0] != 1:
            bad.append(str(s))
    nc_count = sum(1 for q in g.nc_quotients if q.r > 1)
    cond1 = not bad and not problems and nc_count <= 2
    rep.conditions["singularities"] = cond1
    rep.details["singularities"] = (
        f"{len(interior)} interior, {nc_count} NC quotient(s) with r > 1"
        + (f"; not of the form 1/n^2(1,na-1): {', '.join(bad)}" if bad else "")
        + (f"; {'; '.join(problems)}" if problems else "")
    )
    k2 = glued_k_squared(g)
    rep.conditions["K^2 = 9"] = k2 == 9
    rep.details["K^2 = 9"] = f"K^2 = {k2}"
    rho = sorted(c.picard for c in g.components)
    rep.conditions["Picard numbers"] = rho in ([1, 1], [1, 2])
    rep.details["Picard numbers"] = f"rho = {tuple(rho)}"
    return rep


def adjunction_defect(c: Component, nc_quotients) -> Fraction:
    """K.Delta + Delta^2 - (-2 + sum(1 - 1/r_j)); zero when adjunction balances."""
    rhs = -2 + sum((1 - Fraction(1, q.r) for q in nc_quotients), Fraction(0))
    return c.k_delta() + c.delta_squared() - rhs


def noether_bookkeeping(g: GluedSurface) -> tuple[Fraction, Fraction]:
    """Both sides of K_1^2 + K_2^2 = 20 - (rho_1 + rho_2) - 4 sum(1 - 1/r_j)."""
    lhs = sum((c.k_squared for c in g.components), Fraction(0))
    rhs = 20 - sum(c.picard for c in g.components) - 4 * sum(
        (1 - Fraction(1, q.r) for q in g.nc_quotients), Fraction(0)
    )
    return lhs, rhs


def noether_sum(c: Component) -> Fraction:
    """K^2 + rho of the minimal resolution: K^2 + rho + sum(Z_K^2 + chain length)."""
    total = c.k_squared + c.picard
    for s in c.singularities:
        if not isinstance(s, CyclicQuotient):
            raise DomainError(f"{c}: Noether audit needs cyclic quotient singularities, got {s}")
        total += zk_squared(s) + chain_length(s)
    return total


def noether_check(c: Component) -> bool:
    return noether_sum(c) == 10
