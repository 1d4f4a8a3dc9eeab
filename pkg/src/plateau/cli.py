"""Command-line driver: classify curves, generate fixtures, run the area
comparison, build coverings, run the trap test, and render SVG figures.

Exit codes for ``classify``: 0 strongly fillable, 1 not strongly fillable,
2 exceptional or borderline, 3 invalid input.  Other subcommands exit 0 on
success and 3 on bad parameters (``cover`` exits 1 on a non-fat polygon).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import curvedoc
from .classifier import (
    BORDERLINE,
    EXCEPTIONAL,
    NOT_STRONGLY_FILLABLE,
    STRONGLY_FILLABLE,
    classify,
)
from .constructions import (
    CapSpec,
    TrapRegion,
    area_demo,
    generate_from_caps,
    infinite_rectangle,
    knoid_curve,
    scherk_curve,
    trapped_by,
)
from .coverings import exact_cover_per_vertex, exact_cover_special, verify_cover
from .curves import BoundaryCurve, validate
from .errors import InvalidCurve, NotFat, PlateauError
from .hyperbolic import Geodesic
from .render import render_svg

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_EXCEPTIONAL = 2
EXIT_INVALID = 3


def _seed() -> int:
    return int(os.environ.get("PLATEAU_SEED", "0"))


def _load_curve(path: str) -> BoundaryCurve:
    with open(path) as fh:
        doc = curvedoc.loads(fh.read())
    curve = curvedoc.doc_to_curve(doc)
    violations = validate(curve)
    if violations:
        raise InvalidCurve(violations)
    return curve


def _emit_curve(curve: BoundaryCurve, meta: dict | None = None) -> int:
    print(curvedoc.dumps(curve_doc := curvedoc.curve_to_doc(curve, meta)))
    return EXIT_OK


def _cmd_classify(args) -> int:
    try:
        curve = _load_curve(args.input)
    except (OSError, ValueError, KeyError, InvalidCurve) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    verdict = classify(curve, tol_exact=args.tol_exact,
                       with_certificate=args.certificate is not None or args.json,
                       horoball_scale=args.horoball_scale)
    payload = curvedoc.verdict_to_dict(verdict, include_certificate=args.json)
    if args.certificate and verdict.certificate is not None:
        with open(args.certificate, "w") as fh:
            fh.write(curvedoc.dumps(curvedoc.certificate_to_dict(verdict.certificate)))
    if args.json:
        print(curvedoc.dumps(payload))
    else:
        print(f"verdict: {verdict.kind}")
        if verdict.reasons:
            print(f"reasons: {', '.join(verdict.reasons)}")
        if verdict.exceptional_cause:
            print(f"cause: {verdict.exceptional_cause}")
        h = verdict.height_report
        if h is not None:
            print(f"height: {h.h}")
        for key, note in verdict.diagnostics.items():
            if key == "vertical_pi_separation":
                print(f"diagnostic: components split vertically pi-apart at "
                      f"c = {note}; not con-fillable")
            elif key == "corner_overlap":
                print(f"diagnostic: {note}")
            elif key == "thin_tail":
                print(f"diagnostic: thin tail at theta = {note.line_theta}")
            elif key == "horoball_scale_sensitivity":
                for cap, rows in note.items():
                    for i, row in enumerate(rows):
                        if row["limit_regular"] != row["at_scale"]:
                            print(f"diagnostic: cap {cap} face {i} regularity "
                                  f"differs at the requested horoball scale "
                                  f"(limit {row['limit_regular']}, "
                                  f"at scale {row['at_scale']})")
        if args.certificate:
            print(f"certificate written to {args.certificate}")
    if verdict.kind == STRONGLY_FILLABLE:
        return EXIT_OK
    if verdict.kind == NOT_STRONGLY_FILLABLE:
        return EXIT_NEGATIVE
    return EXIT_EXCEPTIONAL


def _parse_pairs(text: str) -> list[Geodesic]:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, b = (float(x) for x in chunk.split(","))
        out.append(Geodesic.of(a, b))
    return out


def _cmd_generate(args) -> int:
    try:
        if args.family == "from-caps":
            spec = CapSpec(
                plus=tuple(_parse_pairs(args.plus or "")),
                minus=tuple(_parse_pairs(args.minus or "")),
            )
            return _emit_curve(generate_from_caps(spec), {"family": "from-caps"})
        if args.family == "rectangle":
            a, b = (float(x) for x in args.geodesic.split(","))
            comp = infinite_rectangle(Geodesic.of(a, b), args.t0, args.cap, args.side)
            return _emit_curve(BoundaryCurve((comp,)), {"family": "rectangle"})
        if args.family == "scherk":
            return _emit_curve(scherk_curve(args.n), {"family": "scherk", "n": args.n})
        if args.family == "knoid":
            return _emit_curve(knoid_curve(args.k, args.gap),
                               {"family": "knoid", "k": args.k})
    except (ValueError, PlateauError) as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print("unknown family", file=sys.stderr)
    return EXIT_INVALID


def _cmd_demo(args) -> int:
    try:
        if args.angles:
            geos = _parse_pairs(args.angles)
        else:
            k = args.k
            gap = math.pi / (2 * k)
            geos = [
                Geodesic.of(2 * math.pi * i / k + gap / 2.0,
                            2 * math.pi * (i + 1) / k - gap / 2.0)
                for i in range(k)
            ]
        m_values = [float(x) for x in args.m_list.split(",")]
        demo = area_demo(geos, m_values)
    except (ValueError, PlateauError) as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(curvedoc.area_demo_to_csv(demo))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(curvedoc.dumps(curvedoc.area_demo_to_dict(demo)))
    header = f"{'m':>6} {'a_m':>12} {'b_m':>12} {'c_m':>12} {'2m*a_m':>12} {'bound':>12}"
    print(header)
    for row in demo.rows:
        mark = "  <-- crossover" if row.m == demo.crossover_m else ""
        print(f"{row.m:>6g} {row.a_m:>12.6f} {row.b_m:>12.6f} {row.c_m:>12.6f} "
              f"{row.lhs:>12.4f} {row.bound:>12.4f}{mark}")
    print(f"c_limit = {demo.c_limit!r}")
    if demo.crossover_m is None:
        print("no crossover in the listed range")
    return EXIT_OK


def _cmd_cover(args) -> int:
    try:
        with open(args.input) as fh:
            poly = curvedoc.polygon_from_dict(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        if args.style == "per-vertex":
            cov = exact_cover_per_vertex(poly, args.tol_exact)
        else:
            cov = exact_cover_special(poly, args.i0, args.tol_exact,
                                      rng=np.random.default_rng(_seed()))
    except NotFat as exc:
        print(f"not fat: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except PlateauError as exc:
        print(f"covering failed: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = verify_cover(poly, cov, samples=args.samples,
                          rng=np.random.default_rng(_seed()))
    payload = curvedoc.covering_to_dict(cov)
    payload["verification"] = {
        "coverage": report.coverage,
        "max_residual": report.max_residual,
        "avoidance": report.avoidance,
        "samples": report.samples,
    }
    text = curvedoc.dumps(payload)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    print(text)
    return EXIT_OK


def _cmd_render(args) -> int:
    try:
        curve = _load_curve(args.input)
    except (OSError, ValueError, KeyError, InvalidCurve) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    layers = {}
    if args.layers:
        wanted = set(args.layers.split(","))
        verdict = classify(curve, with_certificate="coverings" in wanted
                           or "tall_rectangles" in wanted)
        if verdict.fat_analysis is not None:
            if "hulls" in wanted:
                layers["hulls"] = [
                    (cap, an.hull) for cap, an in verdict.fat_analysis.caps.items()
                    if an.hull is not None
                ]
            if "faces" in wanted:
                layers["faces"] = [
                    (cap, face) for cap, an in verdict.fat_analysis.caps.items()
                    for face in an.faces
                ]
        if verdict.certificate is not None:
            if "tall_rectangles" in wanted:
                layers["tall_rectangles"] = verdict.certificate.tall_rectangles
            if "coverings" in wanted:
                layers["coverings"] = [
                    (cap, cov)
                    for cap, covs in verdict.certificate.face_coverings.items()
                    for cov in covs
                ]
    svg = render_svg(curve, T=args.T, layers=layers)
    with open(args.svg, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.svg}")
    return EXIT_OK


def _cmd_trap(args) -> int:
    try:
        curve = _load_curve(args.curve)
        with open(args.xi) as fh:
            poly = curvedoc.polygon_from_dict(json.load(fh))
        trap = TrapRegion(poly, args.cap)
    except (OSError, ValueError, KeyError, InvalidCurve) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = trapped_by(curve, trap, report=True)
    if report.trapped:
        print("trapped: the curve is not fillable "
              "(no complete minimal surface bounds it)")
        return EXIT_NEGATIVE
    if not report.disjoint:
        print("not trapped: the curve meets the trap wall")
    else:
        print("not trapped")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plateau",
        description="Strong-fillability classifier for curves at infinity "
                    "of the hyperbolic-plane cross line geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a curve document")
    p.add_argument("input")
    p.add_argument("--tol-exact", type=float, default=1e-9)
    p.add_argument("--horoball-scale", type=float, default=None,
                   help="also report face regularity at this finite scale")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true", help="plain report (default)")
    p.add_argument("--certificate", metavar="OUT", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("generate", help="emit a curve document")
    p.add_argument("family", choices=["from-caps", "rectangle", "scherk", "knoid"])
    p.add_argument("--plus", help="semicolon-separated angle pairs a,b")
    p.add_argument("--minus", help="semicolon-separated angle pairs a,b")
    p.add_argument("--geodesic", help="angle pair a,b")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--cap", choices=["+", "-"], default="+")
    p.add_argument("--side", choices=["short", "long"], default="short")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--gap", type=float, default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("demo", help="area-comparison table")
    p.add_argument("what", choices=["area"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--angles", help="semicolon-separated angle pairs a,b")
    p.add_argument("--m-list", default="2,4,6,8,10,12,14,16,18,20")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=_cmd_demo)

    p = sub.add_parser("cover", help="exact covering of a fat polygon")
    p.add_argument("input", help="polygon JSON: {vertices, alpha_sides}")
    p.add_argument("--style", choices=["per-vertex", "special"], default="per-vertex")
    p.add_argument("--i0", type=int, default=0)
    p.add_argument("--tol-exact", type=float, default=1e-9)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("render", help="render a curve to SVG")
    p.add_argument("input")
    p.add_argument("--svg", required=True)
    p.add_argument("-T", type=float, default=None)
    p.add_argument("--layers", help="comma list: hulls,faces,coverings,tall_rectangles")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("trap", help="trap test against an exact polygon wall")
    p.add_argument("--curve", required=True)
    p.add_argument("--xi", required=True, help="polygon JSON")
    p.add_argument("--cap", choices=["+", "-"], default="+")
    p.set_defaults(func=_cmd_trap)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
