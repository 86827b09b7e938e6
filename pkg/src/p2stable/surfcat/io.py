"""JSON schema for surfaces: kind is one of wps, hypersurface, declared, glued."""
from __future__ import annotations

from fractions import Fraction

from ..exactmath import DomainError, rational_str, to_rational
from ..quotsing import CyclicQuotient, GermKind, Kind, NCQuotient
from .classify import (
    BoundaryCurve,
    BoundaryGerm,
    Contribution,
    GluedSurface,
    Gluing,
    PairTypeData,
    type_b_surface,
)
from .geometry import WPS2, Component, Declared, WPSHypersurface


def singularity_from_json(data: dict):
    kind = data.get("kind")
    if kind is None or kind == "cyclic":
        return CyclicQuotient(int(data["r"]), int(data["a"]))
    if kind == "nc":
        return NCQuotient(int(data["r"]), int(data["a"]))
    try:
        k = Kind(kind)
    except ValueError:
        raise DomainError(f"unknown singularity kind {kind!r}") from None
    return GermKind(k, tuple(int(p) for p in data.get("params", ())))


def singularity_to_json(s) -> dict:
    if isinstance(s, (CyclicQuotient, NCQuotient)):
        return s.to_json()
    out = {"kind": s.kind.value}
    if s.params:
        out["params"] = list(s.params)
    return out


def _pair_data_from_json(data):
    if data is None:
        return None
    curves = []
    for c in data["curves"]:
        germs = tuple(
            BoundaryGerm(Contribution(g["kind"]), int(g.get("r", 1))) for g in c.get("germs", ())
        )
        curves.append(BoundaryCurve(int(c.get("genus", 0)), germs, to_rational(c.get("meets_rest", 0))))
    return PairTypeData(tuple(curves))


def _pair_data_to_json(p: PairTypeData) -> dict:
    return {
        "curves": [
            {
                "genus": c.genus,
                "germs": [{"kind": g.kind.value, "r": g.r} for g in c.germs],
                "meets_rest": rational_str(c.meets_rest),
            }
            for c in p.curves
        ]
    }


def component_from_json(data: dict) -> Component:
    kind = data.get("kind")
    sings = tuple(singularity_from_json(s) for s in data.get("singularities", ()))
    if kind == "wps":
        geom = WPS2(tuple(data["weights"]))
    elif kind == "hypersurface":
        geom = WPSHypersurface(tuple(data["weights"]), int(data["degree"]), sings, int(data.get("picard", 1)))
    elif kind == "declared":
        geom = Declared(
            to_rational(data["k_squared"]),
            int(data["picard"]),
            sings,
            to_rational(data["h_squared"]) if "h_squared" in data else None,
            to_rational(data["k_multiple"]) if "k_multiple" in data else None,
            data.get("name", "declared"),
        )
    else:
        raise DomainError(f"unknown component kind {kind!r}")
    q = data.get("double_curve")
    override = data.get("picard") if kind == "wps" else None
    return Component(
        geom,
        to_rational(q) if q is not None else None,
        _pair_data_from_json(data.get("pair_type")),
        int(override) if override is not None else None,
    )


def component_to_json(c: Component) -> dict:
    g = c.geometry
    if isinstance(g, WPS2):
        out = {"kind": "wps", "weights": list(g.weights)}
        if c.picard_override is not None:
            out["picard"] = c.picard_override
    elif isinstance(g, WPSHypersurface):
        out = {
            "kind": "hypersurface",
            "weights": list(g.weights),
            "degree": g.degree,
            "singularities": [singularity_to_json(s) for s in g.singularities],
            "picard": g.picard,
        }
    else:
        out = {
            "kind": "declared",
            "name": g.name,
            "k_squared": rational_str(g.k_squared),
            "picard": g.picard,
            "singularities": [singularity_to_json(s) for s in g.singularities],
        }
        if g.h_squared is not None:
            out["h_squared"] = rational_str(g.h_squared)
        if g.k_multiple is not None:
            out["k_multiple"] = rational_str(g.k_multiple)
    if c.double_curve is not None:
        out["double_curve"] = rational_str(c.double_curve)
    if c.pair_type_data is not None:
        out["pair_type"] = _pair_data_to_json(c.pair_type_data)
    return out


def surface_from_json(data: dict) -> GluedSurface:
    """Read any surface kind; single components become one-component surfaces.

    A glued surface with two components and no ``gluing`` entry is read as
    type B: the double curves are glued and pair data is derived from the
    NC quotient list.
    """
    degree = data.get("degree_context")
    if data.get("kind") != "glued":
        return GluedSurface((component_from_json(data),), degree=degree)
    comps = [component_from_json(c) for c in data["components"]]
    nc = tuple(NCQuotient(int(q["r"]), int(q["a"])) for q in data.get("nc_quotients", ()))
    if "gluing" not in data:
        if len(comps) != 2:
            raise DomainError("implicit gluing is only defined for two components")
        return type_b_surface(comps[0], comps[1], nc, degree)
    gluing = []
    for gl in data["gluing"]:
        if "fold" in gl:
            gluing.append(Gluing(tuple(gl["fold"])))
        else:
            gluing.append(Gluing(tuple(gl["first"]), tuple(gl["second"])))
    return GluedSurface(tuple(comps), tuple(gluing), nc, degree)


def surface_to_json(g: GluedSurface) -> dict:
    if len(g.components) == 1 and not g.gluing and not g.nc_quotients:
        out = component_to_json(g.components[0])
    else:
        out = {
            "kind": "glued",
            "components": [component_to_json(c) for c in g.components],
            "gluing": [
                {"fold": list(gl.first)} if gl.folded else {"first": list(gl.first), "second": list(gl.second)}
                for gl in g.gluing
            ],
            "nc_quotients": [q.to_json() for q in g.nc_quotients],
        }
    if g.degree is not None:
        out["degree_context"] = g.degree
    return out
