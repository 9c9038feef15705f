"""examples anick | anick-m | sigma-h | elementary."""
from __future__ import annotations

import argparse
from fractions import Fraction
from typing import Any

from tamewild.algebra.context import Context
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.field import format_rational
from tamewild.algebra.parser import parse_poly
from tamewild.core.app import RunOptions
from tamewild.models.report import Report
from tamewild.services.autom import anick, anick_m, anick_original, elementary, sigma_h

from . import add_command, names

TZ = Context(("t", "z"))


def _report(command: str, endo: NcEndo, input: dict[str, Any]) -> Report:
    return Report(command=command, input=input, result={"endo": str(endo), "degree": endo.degree()})


def anick_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    endo = anick_original() if args.original else anick()
    return _report("examples anick", endo, {"original": bool(args.original)})


def anick_m_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    return _report("examples anick-m", anick_m(args.m), {"m": args.m})


def sigma_h_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    h = parse_poly(args.h, TZ)
    return _report("examples sigma-h", sigma_h(h), {"h": str(h)})


def elementary_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.context
    f = parse_poly(args.f, ctx)
    endo = elementary(args.variable, args.alpha, f)
    return _report(
        "examples elementary",
        endo,
        {"variable": args.variable, "alpha": format_rational(args.alpha), "f": str(f), "vars": names(ctx)},
    )


def register(subparsers: argparse._SubParsersAction) -> None:
    group = subparsers.add_parser("examples", help="named automorphisms").add_subparsers(dest="action", required=True)
    p = add_command(group, "anick", anick_cmd, "(x + z(xz - zy), y + (xz - zy)z, z)")
    p.add_argument("--original", action="store_true", help="variant with y and z exchanged")
    p = add_command(group, "anick-m", anick_m_cmd, "(x + z(xz - zy)^m, y + (xz - zy)^m z, z)")
    p.add_argument("m", type=int)
    p = add_command(group, "sigma-h", sigma_h_cmd, "(x + z h(xz - zy, z), y + h(xz - zy, z) z, z)")
    p.add_argument("h", help="polynomial in t, z with zero constant term")
    p = add_command(group, "elementary", elementary_cmd, "change one generator to alpha*x_j + f(others)")
    p.add_argument("variable")
    p.add_argument("alpha", type=Fraction, help="nonzero rational, e.g. 3/2")
    p.add_argument("f")


__all__ = ["register"]
