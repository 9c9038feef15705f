"""deriv dl | metab | fox-l | fox-r | abelianize."""
from __future__ import annotations

import argparse

from tamewild.algebra.parser import parse_poly
from tamewild.core.app import RunOptions
from tamewild.core.errors import UnknownVariable
from tamewild.models.report import Report
from tamewild.services.deriv import Side, UVContext, abelianize, dicks_lewin, fox, metab_derivative

from . import add_command, names


def _derivative(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.context
    f = parse_poly(args.f, ctx)
    if args.var not in ctx.names:
        raise UnknownVariable(f"unknown variable {args.var!r}; expected one of {names(ctx)}")
    if args.kind == "dl":
        value = dicks_lewin(f, args.var)
    elif args.kind == "metab":
        value = metab_derivative(f, args.var, UVContext(ctx))
    else:
        value = fox(f, args.var, Side.LEFT if args.kind == "fox-l" else Side.RIGHT)
    return Report(
        command=f"deriv {args.kind}",
        input={"f": str(f), "var": args.var, "vars": names(ctx)},
        result={"derivative": str(value)},
    )


def _abelianize(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.context
    f = parse_poly(args.f, ctx)
    return Report(
        command="deriv abelianize",
        input={"f": str(f), "vars": names(ctx)},
        result={"poly": str(abelianize(f))},
    )


def register(subparsers: argparse._SubParsersAction) -> None:
    group = subparsers.add_parser("deriv", help="derivatives of K<X>").add_subparsers(dest="action", required=True)
    descriptions = {
        "dl": "Dicks-Lewin derivative, valued in K<X> (x) K<X>",
        "metab": "metabelian derivative, valued in K[U, V]",
        "fox-l": "left Fox derivative",
        "fox-r": "right Fox derivative",
    }
    for kind, text in descriptions.items():
        p = add_command(group, kind, _derivative, text)
        p.add_argument("f")
        p.add_argument("var")
        p.set_defaults(kind=kind)
    p = add_command(group, "abelianize", _abelianize, "image in K[X]")
    p.add_argument("f")


__all__ = ["register"]
