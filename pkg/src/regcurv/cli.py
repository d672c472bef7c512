"""Command line interface.

Exit codes: 0 success, 2 input/parse error, 3 domain precondition
violated (e.g. not an edge), 4 request outside the supported range.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator, Sequence

from . import census, curvature, families, transport
from .errors import (
    DomainError,
    InputError,
    InvalidParams,
    MalformedGraph6,
    RegCurvError,
    UnsupportedRange,
)
from .graphcore import Graph
from .io import emit_edge_list, emit_graph6, iter_graph6_lines, parse_edge_list, parse_graph6

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_RANGE = 0, 2, 3, 4

FAMILY_GRAMMAR = (
    "family spec grammar: name[:p1[,p2]] with name in "
    "cycle, path, star, complete, kbipartite, hypercube, cocktail, petersen, "
    "dodecahedral, prism, moebius, bi, sharpness, figure; "
    "'product A B [C ...]' takes nested specs"
)

CSV_COLUMNS = [
    "id", "n", "regular_degree", "ric_min_num", "ric_min_den",
    "ricci_flat", "zero_ricci_flat", "bone_idle",
]


def rational_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator, "decimal": f"{float(q):.6f}"}


def parse_family(spec: str) -> Graph:
    name, _, rest = spec.partition(":")
    params = tuple(p for p in rest.split(",") if p) if rest else ()
    try:
        kind = families.Kind(name.strip().lower())
    except ValueError:
        raise InvalidParams(f"unknown family {name!r}; {FAMILY_GRAMMAR}") from None
    return families.generate(families.FamilySpec(kind, params))


def build_family(specs: Sequence[str]) -> Graph:
    if not specs:
        raise InvalidParams(f"missing family spec; {FAMILY_GRAMMAR}")
    if specs[0] == "product":
        if len(specs) < 3:
            raise InvalidParams("product needs at least two factor specs")
        g = parse_family(specs[1])
        for s in specs[2:]:
            g = families.cartesian_product(g, parse_family(s))
        return g
    if len(specs) != 1:
        raise InvalidParams(f"unexpected extra arguments {specs[1:]}; {FAMILY_GRAMMAR}")
    return parse_family(specs[0])


def load_graph(args: argparse.Namespace) -> tuple[Graph, list[str] | None]:
    if args.family:
        return build_family(args.family.split()), None
    if args.graph6:
        return parse_graph6(args.graph6), None
    path = args.file
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    if path.endswith((".g6", ".graph6")):
        first = next(iter_graph6_lines(text.splitlines()), None)
        if first is None:
            raise MalformedGraph6(f"{path} holds no graph")
        return parse_graph6(first[1]), None
    return parse_edge_list(text)


def _resolve_vertex(token: str, labels: list[str] | None) -> int:
    if labels is not None and token in labels:
        return labels.index(token)
    try:
        return int(token)
    except ValueError:
        raise InputError(f"unknown vertex {token!r}") from None


# edge -------------------------------------------------------------------


def cmd_edge(args: argparse.Namespace) -> int:
    g, labels = load_graph(args)
    x = _resolve_vertex(args.x, labels)
    y = _resolve_vertex(args.y, labels)
    rep = curvature.edge_report(g, x, y)
    alphas = [transport.as_rational(a) for a in args.alpha]
    if rep.equal_degree:
        table = [(a, rep.kappa_alpha(a)) for a in alphas]
    else:
        table = [(a, transport.kappa_alpha_direct(g, x, y, a)) for a in alphas]
    if args.json:
        payload = {
            "x": x,
            "y": y,
            "deg_x": rep.deg_x,
            "deg_y": rep.deg_y,
            "kappa": rational_json(rep.kappa),
            "kappa0": rational_json(rep.kappa0),
            "gap_numerator": rep.gap_numerator,
            "breakpoint": rational_json(rep.breakpoint),
            "triangle_count": rep.triangle_count,
            "kappa_alpha": [
                {"alpha": rational_json(a), "value": rational_json(v)} for a, v in table
            ],
            "ricci_flat_edge": rep.is_ricci_flat_edge,
            "zero_ricci_flat_edge": rep.is_zero_ricci_flat_edge,
            "bone_idle_edge": rep.is_bone_idle_edge,
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    path = "closed form" if rep.equal_degree else "optimal transport"
    print(f"edge ({x}, {y})  degrees {rep.deg_x},{rep.deg_y}  [{path}]")
    print(f"kappa={rep.kappa}")
    print(f"kappa_0={rep.kappa0}")
    if rep.gap_numerator is not None:
        print(f"gap: kappa - kappa_0 = {rep.gap_numerator}/{rep.deg_x}")
    print(f"breakpoint={rep.breakpoint}")
    print(f"triangles={rep.triangle_count}")
    for a, v in table:
        print(f"kappa_{a}={v}")
    flags = [
        name
        for name, on in (
            ("ricci_flat_edge", rep.is_ricci_flat_edge),
            ("zero_ricci_flat_edge", rep.is_zero_ricci_flat_edge),
            ("bone_idle_edge", rep.is_bone_idle_edge),
        )
        if on
    ]
    print(f"flags={','.join(flags) if flags else '-'}")
    return EXIT_OK


# whole-graph report -------------------------------------------------------


def _graph_record(gid: str, g: Graph, detail: bool) -> dict:
    reports = curvature.edge_reports(g)
    cls = curvature.classify_graph(g, reports)
    rec = {
        "id": gid,
        "n": g.n,
        "regular_degree": g.regular_degree() if g.regular_degree() is not None else "irregular",
        "ric_min": rational_json(cls.ric_min),
        "ricci_flat": cls.ricci_flat,
        "zero_ricci_flat": cls.zero_ricci_flat,
        "bone_idle": cls.bone_idle,
    }
    if detail:
        rec["edges"] = [
            {
                "x": r.x,
                "y": r.y,
                "kappa": rational_json(r.kappa),
                "kappa0": rational_json(r.kappa0),
                "gap_numerator": r.gap_numerator,
            }
            for r in reports
        ]
    return rec


def cmd_report(args: argparse.Namespace) -> int:
    g, _ = load_graph(args)
    rec = _graph_record("0", g, args.detail)
    if args.json:
        print(json.dumps(rec, sort_keys=True))
        return EXIT_OK
    print(f"n={rec['n']} regular_degree={rec['regular_degree']}")
    q = rec["ric_min"]
    print(f"ric_min={Fraction(q['num'], q['den'])}")
    for key in ("ricci_flat", "zero_ricci_flat", "bone_idle"):
        print(f"{key}={str(rec[key]).lower()}")
    if args.detail:
        for e in rec["edges"]:
            k, k0 = e["kappa"], e["kappa0"]
            print(
                f"  ({e['x']}, {e['y']}) kappa={Fraction(k['num'], k['den'])} "
                f"kappa_0={Fraction(k0['num'], k0['den'])}"
            )
    return EXIT_OK


# scan ---------------------------------------------------------------------


def _scan_one(item: tuple[int, str, bool]) -> dict:
    lineno, rec, detail = item
    try:
        g = parse_graph6(rec)
        return _graph_record(str(lineno), g, detail)
    except RegCurvError as exc:
        return {"id": str(lineno), "error": f"{type(exc).__name__}: {exc}"}


def _ordered_results(items: Iterator[tuple[int, str, bool]], jobs: int) -> Iterator[dict]:
    if jobs <= 1:
        for it in items:
            yield _scan_one(it)
        return
    window = 4 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending: deque = deque()
        for it in items:
            pending.append(pool.submit(_scan_one, it))
            if len(pending) >= window:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


def cmd_scan(args: argparse.Namespace) -> int:
    if args.path == "-":
        lines = [ln.rstrip("\n") for ln in sys.stdin]
    else:
        with open(args.path, encoding="ascii", errors="replace") as fh:
            lines = fh.read().splitlines()
    items = ((ln, rec, args.detail) for ln, rec in iter_graph6_lines(lines))
    jobs = args.jobs if args.jobs is not None else int(os.environ.get("RICCI_JOBS", "1"))
    summary = {"total": 0, "ric_positive": 0, "ricci_flat": 0, "bone_idle": 0, "failed": 0}
    out = sys.stdout
    writer = None
    if args.emit == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    for rec in _ordered_results(items, max(1, jobs)):
        if "error" in rec:
            summary["failed"] += 1
            print(f"line {rec['id']}: {rec['error']}", file=sys.stderr)
            continue
        summary["total"] += 1
        q = rec["ric_min"]
        summary["ric_positive"] += q["num"] > 0
        summary["ricci_flat"] += rec["ricci_flat"]
        summary["bone_idle"] += rec["bone_idle"]
        if writer is not None:
            writer.writerow([
                rec["id"], rec["n"], rec["regular_degree"], q["num"], q["den"],
                int(rec["ricci_flat"]), int(rec["zero_ricci_flat"]), int(rec["bone_idle"]),
            ])
        else:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    if writer is not None:
        out.write("# summary " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    else:
        out.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
    if summary["failed"] and args.strict:
        return EXIT_INPUT
    return EXIT_OK


# census / family ------------------------------------------------------------


def cmd_census(args: argparse.Namespace) -> int:
    req = census.CensusRequest(args.n, args.d)
    graphs = census.enumerate_regular(req)
    table = census.census_with_classification(req, graphs)
    if args.json:
        print(json.dumps(table.as_dict(), sort_keys=True))
    else:
        print(f"n={table.n} d={table.d}")
        print(f"total={table.total}")
        print(f"ric_positive={table.ric_positive}")
        print(f"ricci_flat={table.ricci_flat}")
        print(f"bone_idle={table.bone_idle}")
    if args.graph6_out:
        with open(args.graph6_out, "w", encoding="ascii") as fh:
            for g in graphs:
                fh.write(emit_graph6(g).decode("ascii") + "\n")
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    g = build_family(args.spec)
    if args.format == "graph6":
        sys.stdout.write(emit_graph6(g).decode("ascii") + "\n")
    else:
        sys.stdout.write(emit_edge_list(g))
    return EXIT_OK


# parser -------------------------------------------------------------------


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family spec, e.g. 'petersen' or 'cocktail:4'")
    src.add_argument("--file", help="edge-list file ('n m' header) or .g6 file")
    src.add_argument("--graph6", help="inline graph6 string")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regcurv",
        description="Exact Ollivier-Ricci and Lin-Lu-Yau curvature of graph edges.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("edge", help="curvature of one edge")
    _add_source(p)
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--alpha", action="append", default=[], help="idleness, e.g. 1/2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_edge)

    p = sub.add_parser("report", help="classification of a whole graph")
    _add_source(p)
    p.add_argument("--detail", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("scan", help="classify every graph in a graph6 file")
    p.add_argument("path", help="graph6 file, '-' for stdin")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env RICCI_JOBS)")
    p.add_argument("--emit", choices=("csv", "json"), default="csv")
    p.add_argument("--detail", action="store_true", help="attach per-edge data (json)")
    p.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="exit 2 if any line fails (default on)",
    )
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("census", help="count connected d-regular graphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--graph6-out", help="also write the enumerated graphs here")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("family", help="emit a named graph", epilog=FAMILY_GRAMMAR)
    p.add_argument("spec", nargs="+")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InputError, OSError, ValueError) as exc:
        msg = f"error: {exc}"
        if isinstance(exc, InvalidParams):
            msg += f"\n{FAMILY_GRAMMAR}"
        print(msg, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
