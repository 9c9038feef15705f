"""ge2 check | complete."""
from __future__ import annotations

import argparse

from tamewild.algebra.parser import Mode, format_matrix, parse_matrix, parse_poly
from tamewild.core.app import RunOptions
from tamewild.models.ge2 import Member, NotCompletable
from tamewild.models.report import Report
from tamewild.services.ge2 import complete_to_ge2, ge2_membership

from . import add_command, names


def check(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.z_context
    m = parse_matrix(args.matrix, ctx)
    outcome = ge2_membership(m)
    payload = {"command": "ge2 check", "input": {"matrix": format_matrix(m), "zvars": names(ctx)}}
    if isinstance(outcome, Member):
        return Report(verdict="Member", certificate=outcome.certificate.serialize_model(), **payload)
    return Report(verdict="NotMember", witness=outcome.witness.serialize_model(), **payload)


def complete(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.z_context
    a = parse_poly(args.a, ctx, Mode.COMMUTATIVE)
    b = parse_poly(args.b, ctx, Mode.COMMUTATIVE)
    outcome = complete_to_ge2(a, b)
    payload = {"command": "ge2 complete", "input": {"a": str(a), "b": str(b), "zvars": names(ctx)}}
    if isinstance(outcome, NotCompletable):
        return Report(verdict="NotCompletable", witness=outcome.witness.serialize_model(), **payload)
    return Report(
        verdict="Completed",
        certificate=outcome.certificate.serialize_model(),
        result={"c": str(outcome.c), "d": str(outcome.d)},
        **payload,
    )


def register(subparsers: argparse._SubParsersAction) -> None:
    group = subparsers.add_parser("ge2", help="GE2 membership over K[Z]").add_subparsers(dest="action", required=True)
    p = add_command(group, "check", check, "decide whether a 2x2 matrix is a product of elementary matrices")
    p.add_argument("matrix", help='matrix literal, e.g. "[[1+z1*z2, z2^2],[-z1^2, 1-z1*z2]]"')
    p = add_command(group, "complete", complete, "complete a column (a, b) to a matrix in GE2")
    p.add_argument("a")
    p.add_argument("b")


__all__ = ["register", "check", "complete"]
