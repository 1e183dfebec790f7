"""Command-line interface: point checks, slice rendering, growth
diagnostics, and the involution-identity verification report."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .algebra import BoundaryData, CharacterPoint, MarkoffQuad, vertex_residual
from .bq import BqParams, Status, decide_bq
from .fib import FibTable, growth_report
from .markoff import MarkoffMap
from .render import load_config, render_to_file
from .torelli import (IDENTITY_FACTORS, MAGNUS, TAU, character_agree,
                      equal_in_out, factored, induced_character_map)

EXIT_IN_BQ = 0
EXIT_NOT_BQ = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 64


def parse_complex(s: str) -> complex:
    """Accepts 're,im' pairs or plain Python literals like '1.5' / '2j'."""
    try:
        if "," in s:
            re, im = s.split(",")
            return complex(float(re), float(im))
        return complex(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("bad complex value %r" % s) from exc


def _point(values: List[complex]) -> CharacterPoint:
    return CharacterPoint(*values)


def _map_for(pt: CharacterPoint) -> MarkoffMap:
    quad = MarkoffQuad((pt.a, pt.b, pt.c, pt.d),
                       BoundaryData((pt.x, pt.y, pt.z)), on_variety=False)
    return MarkoffMap(quad)


def cmd_check(args) -> int:
    pt = _point(args.coords)
    verdict = decide_bq(_map_for(pt), BqParams(K=args.k))
    print("residual: %.3g" % abs(vertex_residual(pt)))
    if verdict.status is Status.IN_BQ:
        print("verdict: InBQ")
        print("certificate: %d faces, %d edges"
              % (len(verdict.tree.arc_bounds), len(verdict.tree.edges)))
        return EXIT_IN_BQ
    if verdict.status is Status.NOT_BQ:
        w = verdict.witness
        print("verdict: NotBQ (%s)" % w.kind.value)
        print("witness face: %r" % (w.face,))
        if w.value is not None:
            print("witness value: %r" % (w.value,))
        return EXIT_NOT_BQ
    print("verdict: Undecided (budget: %s)" % verdict.budget_hit)
    return EXIT_UNDECIDED


def cmd_render(args) -> int:
    try:
        config = load_config(args.config)
    except (OSError, KeyError, ValueError, TypeError) as exc:
        print("bad config: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    worst = render_to_file(config, args.out, workers=args.threads)
    print("wrote %s (max residual %.3g)" % (args.out, worst))
    return 0


def cmd_fib(args) -> int:
    pt = _point(args.coords)
    table = FibTable()
    report = growth_report(_map_for(pt), table, args.depth)
    print("base region values: 1 1 1, end regions: 3 3, base faces: 2 2 2")
    print("kappa_lower: %.6f" % report.kappa_lower)
    print("kappa_upper: %.6f" % report.kappa_upper)
    print("argmin: %r" % (report.argmin,))
    return 0


def cmd_torelli(args) -> int:
    worst = 0.0
    for name in sorted(MAGNUS):
        f = factored(name)
        dev = character_agree(MAGNUS[name], f, trials=args.trials,
                              seed=args.seed)
        ok = equal_in_out(MAGNUS[name], f, search_radius=6)
        worst = max(worst, dev)
        print("%s = %s: conjugate=%s, trace deviation %.3g"
              % (name, " * ".join("tau_" + t for t in
                                  IDENTITY_FACTORS[name]), ok, dev))
    print("max deviation: %.3g" % worst)
    return 0 if worst <= 1e-8 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bqdomain",
        description="Membership tests and slice renders for the Bowditch "
                    "domain on the trace variety of the three-holed "
                    "projective plane.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide membership for one point")
    c.add_argument("coords", nargs=7, type=parse_complex,
                   metavar="COORD", help="a b c d x y z as re,im pairs")
    c.add_argument("--k", type=float, default=None,
                   help="level threshold (default 2+M)")
    c.set_defaults(fn=cmd_check)

    r = sub.add_parser("render", help="render a parameter slice to PPM")
    r.add_argument("--config", required=True, help="JSON slice config")
    r.add_argument("--out", required=True, help="output PPM path")
    r.add_argument("--threads", type=int, default=1)
    r.set_defaults(fn=cmd_render)

    f = sub.add_parser("fib", help="growth diagnostics for one point")
    f.add_argument("coords", nargs=7, type=parse_complex, metavar="COORD")
    f.add_argument("--depth", type=int, default=6)
    f.set_defaults(fn=cmd_fib)

    t = sub.add_parser("torelli", help="verify the generator identities")
    t.add_argument("--trials", type=int, default=200)
    t.add_argument("--seed", type=int, default=7)
    t.set_defaults(fn=cmd_torelli)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
