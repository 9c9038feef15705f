"""coord decide."""
from __future__ import annotations

import argparse

from tamewild.algebra.parser import parse_poly
from tamewild.core.app import RunOptions
from tamewild.models.report import Report
from tamewild.services.autom import decide_coordinate, decide_tame_coordinate_linear, decide_wild_coordinate

from . import add_command, names

_METHODS = {
    "auto": decide_coordinate,
    "linear": decide_tame_coordinate_linear,
    "linear-part": decide_wild_coordinate,
}


def decide(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.context
    f = parse_poly(args.f, ctx)
    verdict = _METHODS[args.method](f)
    return Report.from_verdict("coord decide", {"f": str(f), "vars": names(ctx)}, verdict)


def register(subparsers: argparse._SubParsersAction) -> None:
    group = subparsers.add_parser("coord", help="coordinates of K<x,y,z>").add_subparsers(dest="action", required=True)
    p = add_command(group, "decide", decide, "decide whether f is a tame or wild z-coordinate")
    p.add_argument("f", help='polynomial, e.g. "x + z*(x*z - z*y)"')
    p.add_argument(
        "--method",
        choices=sorted(_METHODS),
        default="auto",
        help="auto: dispatch on shape; linear: f linear in x, y; linear-part: test the linear part only",
    )


__all__ = ["register", "decide"]
