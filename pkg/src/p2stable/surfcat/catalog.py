"""Built-in degree 4 and 5 classification tables and their verifier."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..curvewt import CurveGerm, germ, index_congruence_a, index_congruence_b, stable_pair_local_test
from ..exactmath import DomainError
from ..markov import enumerate_tree, manetti_weights
from ..quotsing import CyclicQuotient, GermKind, NCQuotient, is_class_T, is_p2_admissible
from ..report import Check, Report
from .classify import CoarseType, GluedSurface, coarse_type, single, slt_constraint, type_b_surface
from .geometry import WPS2, Component, WPSHypersurface, k_squared, hyp_k_squared
from .typeb import (
    adjunction_defect,
    delta_squares,
    glued_k_squared,
    interior_singularities,
    noether_bookkeeping,
    noether_sum,
    surface_singularities,
    t1_degree,
    type_b_smoothable,
)


@dataclass(frozen=True)
class CatalogRow:
    label: str
    surface: GluedSurface
    singularities: tuple = ()  # as listed in the table
    toric_models: tuple = ()  # (hypersurface, P(1,4,w)) pairs related by the 2nd Veronese


def veronese2(s: WPS2) -> tuple[tuple[int, int, int, int], int]:
    """P(u, v, w) with v even and u, w odd, re-embedded by its 2nd Veronese subring.

    The even part of k[U, V, W] is generated by U^2, V, UW, W^2 (degrees halved),
    subject to the one relation (U^2)(W^2) = (UW)^2.  Returns the ambient weights
    of the image (X, Y, Z, T) = (U^2, V, UW, W^2) and the degree of XT = Z^2.
    """
    u, v, w = s.weights
    if v % 2 or not (u % 2 and w % 2):
        raise DomainError(f"{s}: expected weights (odd, even, odd)")
    gens = {"X": (2, 0, 0), "Y": (0, 1, 0), "Z": (1, 0, 1), "T": (0, 0, 2)}
    degs = {k: (e[0] * u + e[1] * v + e[2] * w) // 2 for k, e in gens.items()}
    # the relation holds monomially and is homogeneous
    xt = tuple(a + b for a, b in zip(gens["X"], gens["T"]))
    zz = tuple(2 * a for a in gens["Z"])
    if xt != zz or degs["X"] + degs["T"] != 2 * degs["Z"]:
        raise AssertionError("Veronese relation is not XT = Z^2")
    ambient = (degs["X"], degs["Y"], degs["Z"], degs["T"])
    return ambient, degs["X"] + degs["T"]


def _nc(r, a=1):
    return NCQuotient(r, a)


def _cq(r, a):
    return CyclicQuotient(r, a)


X26 = WPSHypersurface((1, 2, 13, 25), 26, (_cq(25, 4),), picard=1)
X6 = WPSHypersurface((1, 2, 3, 5), 6, (_cq(5, 4),), picard=1)


def catalog_rows(d: int) -> list[CatalogRow]:
    p2 = CatalogRow("P^2", single(Component(WPS2((1, 1, 1)))), ())
    p114 = CatalogRow("P(1,1,4)", single(Component(WPS2((1, 1, 4)))), (_cq(4, 1),))
    p112x2 = CatalogRow(
        "P(1,1,2) u P(1,1,2) [H, H]",
        type_b_surface(Component(WPS2((1, 1, 2)), 1), Component(WPS2((1, 1, 2)), 1), (_nc(2),)),
        (_nc(2),),
    )
    if d == 4:
        return [p2, p114, p112x2]
    if d == 5:
        return [
            p2,
            p114,
            CatalogRow(
                "X_26 in P(1,2,13,25)", single(Component(X26)), (_cq(25, 4),),
                ((X26, WPS2((1, 4, 25))),),
            ),
            CatalogRow("P(1,4,25)", single(Component(WPS2((1, 4, 25)))), (_cq(4, 1), _cq(25, 4))),
            p112x2,
            CatalogRow(
                "P(1,1,5) u (X_6 in P(1,2,3,5)) [H, 2H]",
                type_b_surface(Component(WPS2((1, 1, 5)), 1), Component(X6, 2), (_nc(5),)),
                (_nc(5),),
                ((X6, WPS2((1, 4, 5))),),
            ),
            CatalogRow(
                "P(1,1,5) u P(1,4,5) [H, 4H]",
                type_b_surface(Component(WPS2((1, 1, 5)), 1), Component(WPS2((1, 4, 5)), 4), (_nc(5),)),
                (_cq(4, 1), _nc(5)),
            ),
        ]
    raise DomainError(f"built-in tables exist for degrees 4 and 5 only, got {d}")


def _index(s) -> Optional[int]:
    if isinstance(s, (CyclicQuotient, NCQuotient)):
        return s.index
    return None


def check_surface(g: GluedSurface, d: int, label: str = "", expected=None, toric_models=()) -> Report:
    """Every numerical condition a degree-d surface must meet, as a report."""
    rep = Report(label or str(g))
    kind = coarse_type(g)
    rep.add("coarse type", kind in (CoarseType.A, CoarseType.B), kind.value)
    rep.add("slt for 3 not dividing d", slt_constraint(d, g), f"d = {d}, type {kind.value}")

    if kind is CoarseType.B:
        k2 = glued_k_squared(g)
    else:
        k2 = g.components[0].k_squared
    rep.add("K^2 = 9", k2 == 9, f"K^2 = {k2}")

    sings = surface_singularities(g)
    if expected is not None:
        want = sorted(map(str, expected))
        got = sorted(map(str, sings))
        rep.add("singularities match table", got == want, f"computed {got}, table {want}")

    indices = [(str(s), _index(s)) for s in sings]
    worst = max((i for _, i in indices if i is not None), default=1)
    rep.add("index <= d", worst <= d, f"max index {worst}, d = {d}")

    interior, problems = interior_singularities(g)
    cyclic = [s for s in interior if isinstance(s, CyclicQuotient)]
    bad = [str(s) for s in cyclic if not is_p2_admissible(s)]
    other = [str(s) for s in interior if not isinstance(s, CyclicQuotient)]
    rep.add(
        "quotient singularities 1/n^2(1,na-1), 3 does not divide n",
        not bad and not problems,
        "; ".join(filter(None, [f"{len(cyclic)} checked", ", ".join(bad), "; ".join(problems),
                                f"not cyclic: {', '.join(other)}" if other else ""])),
    )

    if kind is CoarseType.A:
        rho = g.components[0].picard
        rep.add("Picard number 1", rho == 1, f"rho = {rho}")

    if kind is CoarseType.B:
        cond = type_b_smoothable(g)
        for name, ok in cond.conditions.items():
            rep.add(f"type B: {name}", ok, cond.details.get(name, ""))
        t1 = t1_degree(g)
        rep.add("deg T^1 integral", t1.denominator == 1, f"Delta_1^2 + Delta_2^2 = {t1}")
        rho1, rho2 = (c.picard for c in g.components)
        expect = delta_squares(rho1, rho2)
        rep.add("deg T^1 = 3 - (rho_1 + rho_2)", t1 == expect, f"{t1} vs {expect}")
        for i, c in enumerate(g.components, 1):
            defect = adjunction_defect(c, g.nc_quotients)
            rep.add(f"adjunction on X_{i}", defect == 0, f"K.Delta + Delta^2 off by {defect}")
        lhs, rhs = noether_bookkeeping(g)
        rep.add("K_1^2 + K_2^2 = 20 - rho - 4 sum(1 - 1/r)", lhs == rhs, f"{lhs} vs {rhs}")

    for i, c in enumerate(g.components, 1):
        if all(isinstance(s, CyclicQuotient) for s in c.singularities):
            total = noether_sum(c)
            rep.add(f"Noether audit on {c}", total == 10, f"K^2 + rho of resolution = {total}")

    for hyp, model in toric_models:
        ambient, degree = veronese2(model)
        ok = ambient == hyp.weights and degree == hyp.degree
        rep.add(
            f"Veronese: {model} = (XT = Z^2) in P{ambient}",
            ok,
            f"deg(XT) = {ambient[0]}+{ambient[3]} = {degree} = 2*{ambient[2]}",
        )
        rep.add(
            f"K^2 of {hyp} equals K^2 of {model}",
            hyp_k_squared(hyp) == k_squared(model),
            f"{hyp_k_squared(hyp)} vs {k_squared(model)}",
        )
    return rep


# -- allowed singularities of (X, D) --------------------------------------------

# (family label, germ builder, range of n, allowed n) per degree; nodes (n = 2) are
# normal crossings and are not listed in the tables
_SMOOTH_FAMILIES = {
    4: [("y^2+x^n", lambda n: germ((0, 2, 1), (n, 0, 1)), range(3, 21), {3}),
        ("x(y^2+x^n)", lambda n: germ((1, 2, 1), (n + 1, 0, 1)), range(2, 21), set())],
    5: [("y^2+x^n", lambda n: germ((0, 2, 1), (n, 0, 1)), range(3, 21), set(range(3, 10))),
        ("x(y^2+x^n)", lambda n: germ((1, 2, 1), (n + 1, 0, 1)), range(2, 21), {2, 3})],
}
# germs on the cover of 1/4(1,1): y^2 + x^n
_QUOTIENT_FAMILIES = {4: set(), 5: {2, 6}}
# NC quotient orders present in each table, with the allowed multiplicity of D on the double curve
_NC_ALLOWED = {4: {2: {0}}, 5: {2: {1}, 5: {0}}}


def _passes_through(n: int, a: int, d: int) -> list[tuple[int, int]]:
    """Monomials x^i y^j with 0 < i+j < 2d/3 compatible with dK + 3D ~ 0 at 1/n^2(1,na-1)."""
    out = []
    for i in range(2 * d):
        for j in range(2 * d):
            if 0 < 3 * (i + j) < 2 * d and index_congruence_a(n, a, d, CurveGerm({(i, j): 1})):
                out.append((i, j))
    return out


def check_germ_table(d: int, rows: Sequence[CatalogRow]) -> Report:
    rep = Report(f"allowed singularities of (X, D), degree {d}")
    for label, build, ns, allowed in _SMOOTH_FAMILIES[d]:
        got = {n for n in ns if stable_pair_local_test(build(n), d).passed}
        rep.add(f"A^2: {label}", got == allowed, f"allowed n = {sorted(got)}, table {sorted(allowed)}")

    interior = {s for row in rows for s in interior_singularities(row.surface)[0]}
    for s in sorted(x for x in interior if isinstance(x, CyclicQuotient)):
        t = is_class_T(s)
        if t is None:
            rep.add(f"{s}: class T", False, "germ table only covers 1/dn^2(1,dna-1)")
            continue
        _, n, a = t
        through = _passes_through(n, a, d)
        if s == CyclicQuotient(4, 1):
            got = {
                k for k in range(2, 21)
                if index_congruence_a(n, a, d, germ((0, 2, 1), (k, 0, 1)))
                and stable_pair_local_test(germ((0, 2, 1), (k, 0, 1)), d).passed
            }
            want = _QUOTIENT_FAMILIES[d]
            rep.add(f"{s}: y^2+x^n on the cover", got == want, f"allowed n = {sorted(got)}, table {sorted(want)}")
            if not want:
                rep.add(f"{s}: D = 0", not through, f"monomials of low order: {through}")
        else:
            rep.add(f"{s}: D = 0", not through, f"monomials of low order: {through}")

    allowed_nc = _NC_ALLOWED[d]
    present = {q.r for row in rows for q in row.surface.nc_quotients if q.r > 1}
    rep.add("NC quotient orders", present == set(allowed_nc), f"{sorted(present)}")
    for r, want in sorted(allowed_nc.items()):
        got = {k for k in range(d) if index_congruence_b(r, d, k)}
        rep.add(f"(xy=0) in 1/{r}(1,-1,1): multiplicity of D on Delta", got == want,
                f"allowed k = {sorted(got)}, table {sorted(want)}")
    return rep


def check_manetti_rows(d: int, rows: Sequence[CatalogRow]) -> Check:
    """Toric normal rows are exactly P(a^2, b^2, c^2) for Markov triples with entries <= d."""
    expected = {manetti_weights(t) for t in enumerate_tree(d).triples}
    found = set()
    for row in rows:
        comps = row.surface.components
        if len(comps) == 1 and isinstance(comps[0].geometry, WPS2):
            found.add(tuple(sorted(comps[0].geometry.weights)))
    return Check(
        "toric rows = Markov surfaces of index <= d",
        found == expected,
        f"rows {sorted(found)}, Markov {sorted(expected)}",
    )


@dataclass
class CatalogReport:
    degree: int
    rows: list[Report] = field(default_factory=list)
    extra: Report = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and (self.extra is None or self.extra.passed)

    def flatten(self) -> Report:
        out = Report(f"catalog degree {self.degree}")
        for r in self.rows:
            out.extend(r, prefix=f"{r.title} :: ")
        if self.extra is not None:
            out.extend(self.extra, prefix="table :: ")
        return out

    def render(self) -> str:
        lines = [f"catalog degree {self.degree}: {len(self.rows)} surfaces"]
        for r in self.rows:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"[{mark}] {r.title}")
            for c in r.failures:
                lines.append(f"    failed: {c.name}: {c.details}")
        if self.extra is not None:
            mark = "PASS" if self.extra.passed else "FAIL"
            lines.append(f"[{mark}] {self.extra.title}")
            for c in self.extra.failures:
                lines.append(f"    failed: {c.name}: {c.details}")
        lines.append("all rows pass" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)


def verify_catalog(d: int, rows: Optional[Sequence[CatalogRow]] = None) -> CatalogReport:
    """Check every row of the degree-d table (or of ``rows``, if given)."""
    if d not in (4, 5):
        raise DomainError(f"built-in tables exist for degrees 4 and 5 only, got {d}")
    rows = list(catalog_rows(d) if rows is None else rows)
    out = CatalogReport(d)
    for row in rows:
        out.rows.append(check_surface(row.surface, d, row.label, row.singularities, row.toric_models))
    extra = check_germ_table(d, rows)
    extra.checks.append(check_manetti_rows(d, rows))
    out.extra = extra
    return out
