"""natree decompose | member | lift.

The nonassociative grammar needs explicit parentheses: ``x*(y*z)``.
"""
from __future__ import annotations

import argparse

from tamewild.algebra.napoly import NaEndo
from tamewild.algebra.parser import Mode, parse_many, parse_na_endo, parse_poly
from tamewild.core.app import RunOptions
from tamewild.models.natree import IsZAutomorphism, NotAutomorphism, No
from tamewild.models.report import Report
from tamewild.services.natree import lift_candidate_check, subalgebra_express_homogeneous, z_tame_decompose

from . import add_command, names


def _fixed(args: argparse.Namespace) -> list[str]:
    return [n.strip() for n in (args.fixed or "").split(",") if n.strip()]


def _input(phi: NaEndo, fixed: list[str], options: RunOptions) -> dict[str, object]:
    return {"endo": str(phi), "vars": names(options.context), "fixed": fixed}


def decompose(args: argparse.Namespace, options: RunOptions) -> Report:
    phi = parse_na_endo(args.endo, options.context)
    fixed = _fixed(args)
    outcome = z_tame_decompose(phi, fixed)
    if isinstance(outcome, NotAutomorphism):
        return Report(
            command="natree decompose",
            input=_input(phi, fixed, options),
            verdict="NotAutomorphism",
            certificate=outcome.certificate.serialize_model(),
        )
    return Report(
        command="natree decompose",
        input=_input(phi, fixed, options),
        verdict="Decomposed",
        steps=[str(s) for s in outcome.steps],
        result={"reductions": [r.serialize_model() for r in outcome.reductions]},
    )


def lift(args: argparse.Namespace, options: RunOptions) -> Report:
    psi = parse_na_endo(args.endo, options.context)
    fixed = _fixed(args)
    outcome = lift_candidate_check(psi, fixed)
    if isinstance(outcome, No):
        return Report(
            command="natree lift",
            input=_input(psi, fixed, options),
            verdict="No",
            certificate=outcome.certificate.serialize_model(),
        )
    assert isinstance(outcome, IsZAutomorphism)
    return Report(
        command="natree lift",
        input=_input(psi, fixed, options),
        verdict="IsZAutomorphism",
        steps=[str(s) for s in outcome.steps],
        result={
            "associative_steps": [str(s) for s in outcome.associative_steps],
            "commutative_steps": [" ; ".join(images) for images in outcome.commutative_steps],
        },
    )


def member(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.context
    g = parse_poly(args.g, ctx, Mode.NONASSOCIATIVE)
    gens = parse_many(args.gens, ctx, Mode.NONASSOCIATIVE)
    expr = subalgebra_express_homogeneous(g, gens, max_degree=options.max_degree)
    payload = {
        "command": "natree member",
        "input": {"g": str(g), "gens": [str(f) for f in gens], "vars": names(ctx)},
    }
    if expr is None:
        return Report(verdict="NotMember", **payload)
    return Report(verdict="Member", result={"expression": str(expr)}, **payload)


def register(subparsers: argparse._SubParsersAction) -> None:
    group = subparsers.add_parser("natree", help="absolutely free algebra K{X}").add_subparsers(
        dest="action", required=True
    )
    for name, handler, text in (
        ("decompose", decompose, "decompose a Z-fixing endomorphism into Z-elementary maps"),
        ("lift", lift, "check a lifting candidate for being a Z-automorphism"),
    ):
        p = add_command(group, name, handler, text)
        p.add_argument("endo", help='images separated by ";", e.g. "x + (y*y) ; y ; z"')
        p.add_argument("--fixed", default="", help="comma-separated generators that stay fixed, e.g. z")
    p = add_command(group, "member", member, "write homogeneous g as a polynomial in homogeneous generators")
    p.add_argument("g")
    p.add_argument("gens", nargs="*", help="generators; put -- before any that start with a minus sign")


__all__ = ["register"]
