"""Command-line entry point.

Exit status: 0 when the check passes (table valid, no counterexample), 1 when
it fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cases, projection, uniqueness, words
from .cones import SimplicialCone
from .errors import HGError
from .exact import rat
from .generators import build
from .pingpong import PingPongTable, falsify, standard_cone, verify


class UsageError(Exception):
    pass


def parse_vector(text: str) -> tuple:
    try:
        return tuple(rat(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad vector {text!r}: {exc}") from exc


def parse_cone(text: str) -> SimplicialCone:
    gens = [parse_vector(g) for g in text.split(";") if g.strip()]
    try:
        return SimplicialCone(tuple(gens))
    except HGError as exc:
        raise UsageError(f"bad cone {text!r}: {exc}") from exc


def parse_grid(text: str) -> uniqueness.GridSpec:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"grid must be lo,hi,step, got {text!r}")
    return uniqueness.GridSpec.of(*(rat(p.strip()) for p in parts))


def _default_cone(n: int) -> SimplicialCone:
    if n == 3:
        return standard_cone()
    if n == 2:
        return SimplicialCone((cases.U2, cases.V2))
    raise UsageError(f"no default cone for n = {n}; pass --cone")


def _table(args) -> PingPongTable:
    C = parse_cone(args.cone) if args.cone else _default_cone(args.n)
    h = build(args.n)
    if C.dim != args.n:
        raise UsageError(f"cone lives in dimension {C.dim}, n = {args.n}")
    return PingPongTable.from_triple(h, C)


def _json_default(o):
    if isinstance(o, (Fraction, projection.PlanePoint)):
        return str(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _emit(args, report: dict) -> None:
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True, default=_json_default)
            fh.write("\n")


def cmd_verify(args) -> int:
    verdict = verify(_table(args))
    report = verdict.to_json()
    for chk in verdict.checks:
        print(f"{'ok  ' if chk.passed else 'FAIL'} {chk.name}")
    print("valid" if verdict.valid else "invalid")
    if verdict.witness is not None:
        w = verdict.witness
        print(f"witness: word {w.word}, q = {list(map(str, w.q))}, image = {list(map(str, w.image))}")
    _emit(args, report)
    return 0 if verdict.valid else 1


def cmd_falsify(args) -> int:
    w = falsify(_table(args))
    if w is None:
        print("no counterexample: the table is valid")
        _emit(args, {"witness": None})
        return 0
    print(f"{w.violation} fails for {w.word}")
    print(f"q = {list(map(str, w.q))}")
    print(f"image = {list(map(str, w.image))}")
    print(f"rechecked: {w.recheck()}")
    _emit(args, {"witness": w.to_json(), "rechecked": w.recheck()})
    return 1


def cmd_uniqueness_scan(args) -> int:
    rep = uniqueness.uniqueness_scan(parse_grid(args.lam), parse_grid(args.mu), parse_grid(args.eta))
    ok = all(a == 0 and b == 0 and c > 0 for a, b, c in rep.survivors)
    ok = ok and all(w.recheck() for w in rep.falsified.values())
    print(f"survivors: {[tuple(map(str, p)) for p in rep.survivors]}")
    print(f"falsified: {len(rep.falsified)}")
    print(f"eta sign forced: {rep.eta_sign_forced}")
    print(f"z-coefficient of b: {rep.mu_squared_coefficient}")
    print(f"z-coefficient of a': {rep.lambda_squared_coefficient}")
    _emit(args, rep.to_json())
    return 0 if ok else 1


def cmd_project(args) -> int:
    report = {}
    if args.point:
        s = parse_vector(args.point)
        if len(s) != 3:
            raise UsageError("--point needs three coordinates")
        p = projection.project(s)
        report["project"] = str(p)
        print(p)
    if args.plane:
        ab = parse_vector(args.plane)
        if len(ab) != 2:
            raise UsageError("--plane needs two coordinates")
        p = projection.PlanePoint(*ab)
        if args.act:
            q = projection.act2d(args.act, p)
            report["act2d"] = str(q)
            print(q)
        else:
            v = projection.unproject(p)
            report["unproject"] = [str(c) for c in v]
            print("(" + ", ".join(map(str, v)) + ")")
    if not report:
        raise UsageError("give --point x,y,z or --plane a,b")
    _emit(args, report)
    return 0


def _figure_path(path, name, count):
    """With several figures, out.svg becomes out.fig1.svg etc."""
    if not path or count == 1:
        return path
    stem, ext = os.path.splitext(path)
    return f"{stem}.{name}{ext}"


def cmd_figures(args) -> int:
    names = sorted(projection.FIGURES) if args.which == "all" else [args.which]
    report = {}
    for name in names:
        fig = projection.emit_figures(name, "svg", _figure_path(args.svg, name, len(names)))
        if args.csv:
            projection.emit_figures(name, "csv", _figure_path(args.csv, name, len(names)))
        report[name] = {
            "points": {label: str(p) for label, p in fig.labelled_points()},
            "annotations": fig.annotations,
        }
        print(f"{name}: {len(fig.labelled_points())} exact points")
    _emit(args, report)
    on_circle = report.get("fig2", {}).get("annotations", {}).get("on_unit_circle", True)
    return 0 if on_circle else 1


def cmd_words(args) -> int:
    h = build(args.n)
    rep = words.injectivity_check(h, args.max_len, args.exp_bound)
    print(f"words checked: {rep.checked}")
    print(f"collisions: {len(rep.collisions)}, identities: {len(rep.identities)}")
    _emit(args, rep.to_json())
    return 0 if rep.ok else 1


def cmd_bt4(args) -> int:
    data = cases.build_bt()
    report = {
        "vectors": cases.bt_vector_report(data),
        "table": cases.verify_bt_table(data),
        "s_conjugation": cases.verify_s_conjugation(),
    }
    table = report["table"]
    print(f"T C+ in C+ (closed): {table['T_Cplus_in_Cplus']['passed']}")
    print(f"T^-1 C- in C- (closed): {table['Tinv_Cminus_in_Cminus']['passed']}")
    print(f"four-cone table valid: {table['valid']}")
    print(f"S v0 = {report['s_conjugation']['scalar']} * x")
    ok = table["T_Cplus_in_Cplus"]["passed"] and table["Tinv_Cminus_in_Cminus"]["passed"]
    if not args.skip_search:
        search = cases.search_fourth_generator(args.bound, args.step, data)
        report["search"] = search
        print(f"fourth generator search over [-{args.bound},{args.bound}]^4: "
              f"{search['distinct_rays_tested']} rays, survivors {search['survivors']}")
        ok = ok and not search["survivors"]
    _emit(args, report)
    return 0 if ok else 1


def cmd_case2d(args) -> int:
    verdict = cases.verify_2d_case()
    print("valid" if verdict.valid else "invalid")
    print(f"closure covers the plane: {verdict.extra['closure_covers_plane']}")
    _emit(args, verdict.to_json())
    return 0 if verdict.valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgpingpong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", metavar="PATH", help="also write the report as JSON")
        p.set_defaults(func=func)
        return p

    for name, func, help_ in (
        ("verify", cmd_verify, "decide whether a cone gives a ping-pong table"),
        ("falsify", cmd_falsify, "search for a counterexample point"),
    ):
        p = add(name, func, help_)
        p.add_argument("--n", type=int, default=3)
        p.add_argument("--cone", help='generators, e.g. "1,-2,1;1,0,3;0,-1,1"')

    p = add("uniqueness-scan", cmd_uniqueness_scan, "falsify cone(u, v, lam u + mu v + eta w) on a grid")
    for name in ("lam", "mu", "eta"):
        p.add_argument(f"--{name}", default="-2,2,1/2", metavar="LO,HI,STEP",
                       help=f"use --{name}=LO,HI,STEP when LO is negative")

    p = add("project", cmd_project, "planar projection queries")
    p.add_argument("--point", metavar="X,Y,Z")
    p.add_argument("--plane", metavar="A,B")
    p.add_argument("--act", choices=["R", "R^-1", "T"])

    p = add("figures", cmd_figures, "emit figure data")
    p.add_argument("--which", choices=["fig1", "fig2", "fig34", "all"], default="all")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--csv", metavar="PATH")

    p = add("words", cmd_words, "check reduced words for collisions")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--exp-bound", type=int, default=3)

    p = add("bt4", cmd_bt4, "the n = 4 cones and the fourth-generator search")
    p.add_argument("--bound", type=int, default=5)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--skip-search", action="store_true")

    add("case2d", cmd_case2d, "the n = 2 table")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, HGError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
