"""metab jm | det | ideal-test | j2 | evidence, trace-test, obstruction."""
from __future__ import annotations

import argparse

from tamewild.algebra.cring import det
from tamewild.algebra.parser import parse_endo, parse_poly
from tamewild.core.app import RunOptions
from tamewild.models.report import Report
from tamewild.services.deriv import Side
from tamewild.services.metab import (
    commutator_ideal_member,
    is_metab_automorphism,
    j2_bar,
    jm,
    kernel_representative,
    tau_lift_obstruction,
    trace_test,
    umirbaev_wildness_evidence,
)

from . import add_command, names


def jm_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    phi = parse_endo(args.endo, options.context)
    return Report(
        command="metab jm",
        input={"endo": str(phi), "vars": names(options.context)},
        result={"jm": jm(phi).to_lists()},
    )


def det_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    phi = parse_endo(args.endo, options.context)
    return Report(
        command="metab det",
        input={"endo": str(phi), "vars": names(options.context)},
        result={"det": str(det(jm(phi))), "automorphism": is_metab_automorphism(phi)},
    )


def ideal_test(args: argparse.Namespace, options: RunOptions) -> Report:
    f = parse_poly(args.f, options.context)
    member = commutator_ideal_member(f)
    return Report(
        command="metab ideal-test",
        input={"f": str(f), "vars": names(options.context)},
        verdict="Member" if member else "NotMember",
    )


def _theta(args: argparse.Namespace, options: RunOptions) -> tuple[dict[str, str], object]:
    rho = parse_endo(args.endo, options.context)
    theta = kernel_representative(rho) if args.kernel else rho
    extra = {"source": str(rho)} if args.kernel else {}
    return {"endo": str(theta), "vars": names(options.context), **extra}, theta


def j2_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    input, theta = _theta(args, options)
    return Report(command="metab j2", input=input, result={"j2": j2_bar(theta).to_lists()})  # type: ignore[arg-type]


def evidence(args: argparse.Namespace, options: RunOptions) -> Report:
    input, theta = _theta(args, options)
    return Report.from_verdict("metab evidence", input, umirbaev_wildness_evidence(theta))  # type: ignore[arg-type]


def trace_test_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    sigma = parse_endo(args.endo, options.context)
    outcome = trace_test(sigma, Side.LEFT if args.side == "l" else Side.RIGHT)
    body = outcome.serialize_model()
    return Report(
        command="trace-test",
        input={"endo": str(sigma), "side": body["side"], "vars": names(options.context)},
        verdict=body.pop("status"),
        result=body,
    )


def obstruction(args: argparse.Namespace, options: RunOptions) -> Report:
    report = tau_lift_obstruction()
    body = report.serialize_model()
    return Report(command="obstruction tau", verdict=body.pop("verdict"), result=body)


def register(subparsers: argparse._SubParsersAction) -> None:
    group = subparsers.add_parser("metab", help="free metabelian algebra").add_subparsers(dest="action", required=True)
    p = add_command(group, "jm", jm_cmd, "metabelian Jacobian J_M")
    p.add_argument("endo")
    p = add_command(group, "det", det_cmd, "det J_M and whether the induced map is an automorphism")
    p.add_argument("endo")
    p = add_command(group, "ideal-test", ideal_test, "membership in the commutator ideal")
    p.add_argument("f")
    for name, handler, text in (
        ("j2", j2_cmd, "reduced 2x2 matrix J_2 of a map inducing the identity on K[X]"),
        ("evidence", evidence, "wildness evidence from J_2 outside GE2"),
    ):
        p = add_command(group, name, handler, text)
        p.add_argument("endo")
        p.add_argument(
            "--kernel",
            action="store_true",
            help="first replace a z-linear automorphism by a representative inducing the identity on K[x,y,z]",
        )

    p = add_command(subparsers, "trace-test", trace_test_cmd, "Fox-derivative trace test for liftability")
    p.add_argument("endo")
    p.add_argument("--side", choices=("l", "r"), default="r")

    group = subparsers.add_parser("obstruction", help="lifting obstructions").add_subparsers(
        dest="action", required=True
    )
    add_command(group, "tau", obstruction, "trace constraints on degree-4 liftings of (x + x^2[y,z], y, z)")


__all__ = ["register"]
