"""Command line front end: markov, sing, curve, surface and catalog subcommands.

Exit codes: 0 when every check passes, 1 on a failed check or a domain
error, 2 on usage errors.  ``--json`` switches to machine-readable output;
all numbers are exact (``"p/q"`` strings for non-integers).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .curvewt import CurveGerm, complete_square, git_weight_test, stable_pair_local_test
from .exactmath import DomainError, rational_str
from .markov import MarkovTree, MarkovTriple, enumerate_tree, is_markov, manetti_wps
from .quotsing import (
    CyclicQuotient,
    chain_length,
    cycle_krel_squared,
    germ_kind,
    is_class_T,
    is_p2_admissible,
    k2rho_change,
    mu_minus,
    resolve,
    zk_squared,
)
from .report import Report
from .surfcat import check_surface, surface_from_json, verify_catalog


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _markov(args) -> int:
    if args.action == "enumerate":
        tree = enumerate_tree(args.max)
        if args.json:
            print(_dump(tree.to_json()))
        else:
            for t in tree.triples:
                print(t, "->", manetti_wps(t))
            print(f"{len(tree.triples)} triples, {len(tree.edges)} mutation edges")
        return 0
    ok = is_markov(*args.triple)
    if args.json:
        print(_dump({"triple": args.triple, "markov": ok}))
    else:
        print(f"{tuple(args.triple)}: {'solution' if ok else 'not a solution'}")
    return 0 if ok else 1


def sing_info(s: CyclicQuotient) -> dict:
    t = is_class_T(s)
    return {
        "singularity": s.to_json(),
        "kind": germ_kind(s).kind.value,
        "index": s.index,
        "resolution": resolve(s),
        "chain_length": chain_length(s),
        "zk_squared": rational_str(zk_squared(s)),
        "k2rho_change": rational_str(k2rho_change(s)),
        "class_T": list(t) if t else None,
        "p2_admissible": is_p2_admissible(s),
    }


def _sing(args) -> int:
    if args.action == "info":
        info = sing_info(CyclicQuotient(args.r, args.a))
        if args.json:
            print(_dump(info))
        else:
            for key, value in info.items():
                print(f"{key}: {value}")
        return 0
    cycle = [int(x) for x in args.cycle.split(",") if x.strip()]
    out = {
        "cycle": cycle,
        "krel_squared": rational_str(cycle_krel_squared(cycle)),
        "h1": args.h1,
        "mu_minus": mu_minus(cycle, args.h1),
    }
    if args.json:
        print(_dump(out))
    else:
        for key, value in out.items():
            print(f"{key}: {value}")
    return 0


def _curve(args) -> int:
    g = CurveGerm.from_json(_read_json(args.germ))
    shift = {}
    if args.complete_square:
        g, shift = complete_square(g, args.order)
    verdict = git_weight_test(g, args.degree) if args.git else stable_pair_local_test(g, args.degree)
    if args.json:
        out = {"germ": g.to_json(), "verdict": verdict.to_json()}
        if args.complete_square:
            out["shift"] = {str(k): rational_str(v) for k, v in sorted(shift.items())}
        print(_dump(out))
    else:
        if args.complete_square:
            print(f"normalized germ: {g}")
        print(verdict)
    return 0 if verdict.passed else 1


def _surface(args) -> int:
    g = surface_from_json(_read_json(args.file))
    rep = check_surface(g, args.degree)
    print(_dump(rep.to_json()) if args.json else rep.render())
    return 0 if rep.passed else 1


def _catalog(args) -> int:
    rep = verify_catalog(args.degree)
    if args.json:
        out = rep.flatten().to_json()
        out["rows"] = [r.title for r in rep.rows]
        print(_dump(out))
    else:
        print(rep.render())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="p2stable", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("markov", help="Markov triples and Manetti surfaces")
    msub = p.add_subparsers(dest="action", required=True)
    e = msub.add_parser("enumerate", help="all triples with entries <= MAX")
    e.add_argument("--max", type=int, required=True)
    e.add_argument("--json", action="store_true")
    c = msub.add_parser("check", help="test a^2 + b^2 + c^2 = 3abc")
    c.add_argument("triple", type=int, nargs=3)
    c.add_argument("--json", action="store_true")
    p.set_defaults(func=_markov)

    p = sub.add_parser("sing", help="cyclic quotient singularities and cusp cycles")
    ssub = p.add_subparsers(dest="action", required=True)
    i = ssub.add_parser("info", help="invariants of 1/r(1,a)")
    i.add_argument("r", type=int)
    i.add_argument("a", type=int)
    i.add_argument("--json", action="store_true")
    c = ssub.add_parser("cycle", help="K^2 and mu_- of a resolution cycle")
    c.add_argument("--cycle", required=True, help="comma separated self-intersections, e.g. --cycle=-2,-3,-7")
    c.add_argument("--h1", type=int, default=1)
    c.add_argument("--json", action="store_true")
    p.set_defaults(func=_sing)

    p = sub.add_parser("curve", help="weight tests for curve germs")
    csub = p.add_subparsers(dest="action", required=True)
    t = csub.add_parser("test", help="stable pair (or GIT) test of a germ")
    t.add_argument("--degree", type=int, required=True)
    t.add_argument("--germ", required=True, help="germ JSON file, or - for stdin")
    t.add_argument("--complete-square", action="store_true")
    t.add_argument("--order", type=int, default=20)
    t.add_argument("--git", action="store_true", help="GIT test at this flag")
    t.add_argument("--json", action="store_true")
    p.set_defaults(func=_curve)

    p = sub.add_parser("surface", help="check a surface descriptor")
    ssub = p.add_subparsers(dest="action", required=True)
    c = ssub.add_parser("check")
    c.add_argument("file", help="surface JSON file, or - for stdin")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--json", action="store_true")
    p.set_defaults(func=_surface)

    p = sub.add_parser("catalog", help="verify the built-in degree 4/5 tables")
    csub = p.add_subparsers(dest="action", required=True)
    v = csub.add_parser("verify")
    v.add_argument("--degree", type=int, required=True, choices=(4, 5))
    v.add_argument("--json", action="store_true")
    p.set_defaults(func=_catalog)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: bad input: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
