"""auto compose | invert | apply | jz | decide-linear | decide-zfix | coordinates."""
from __future__ import annotations

import argparse

from tamewild.algebra.cring import det
from tamewild.algebra.parser import parse_endo, parse_poly
from tamewild.core.app import RunOptions
from tamewild.models.report import Report
from tamewild.services.autom import (
    ZLinearAuto,
    compose,
    decide_coordinates_linear,
    decide_wild_automorphism_zfixing,
    decide_z_tame_linear,
    invert_z_linear,
    is_z_linear_automorphism,
    jz,
)

from . import add_command, names


def _input(endo: object, options: RunOptions) -> dict[str, str]:
    return {"endo": str(endo), "vars": names(options.context)}


def compose_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.context
    phi, psi = parse_endo(args.phi, ctx), parse_endo(args.psi, ctx)
    return Report(
        command="auto compose",
        input={"phi": str(phi), "psi": str(psi), "vars": names(ctx)},
        result={"endo": str(compose(phi, psi))},
    )


def invert(args: argparse.Namespace, options: RunOptions) -> Report:
    rho = parse_endo(args.endo, options.context)
    inverse = invert_z_linear(ZLinearAuto.from_endo(rho)).to_endo()
    return Report(command="auto invert", input=_input(rho, options), result={"endo": str(inverse)})


def apply(args: argparse.Namespace, options: RunOptions) -> Report:
    ctx = options.context
    rho, f = parse_endo(args.endo, ctx), parse_poly(args.f, ctx)
    return Report(
        command="auto apply",
        input={"endo": str(rho), "f": str(f), "vars": names(ctx)},
        result={"poly": str(rho.apply(f))},
    )


def jz_cmd(args: argparse.Namespace, options: RunOptions) -> Report:
    rho = parse_endo(args.endo, options.context)
    m = jz(rho)
    return Report(
        command="auto jz",
        input=_input(rho, options),
        result={"jz": m.to_lists(), "det": str(det(m)), "automorphism": is_z_linear_automorphism(rho)},
    )


def decide_linear(args: argparse.Namespace, options: RunOptions) -> Report:
    rho = parse_endo(args.endo, options.context)
    return Report.from_verdict("auto decide-linear", _input(rho, options), decide_z_tame_linear(rho))


def decide_zfix(args: argparse.Namespace, options: RunOptions) -> Report:
    rho = parse_endo(args.endo, options.context)
    return Report.from_verdict("auto decide-zfix", _input(rho, options), decide_wild_automorphism_zfixing(rho))


def coordinates(args: argparse.Namespace, options: RunOptions) -> Report:
    rho = parse_endo(args.endo, options.context)
    vx, vy = decide_coordinates_linear(rho)
    return Report(
        command="auto coordinates",
        input=_input(rho, options),
        result={"x": vx.serialize_model(), "y": vy.serialize_model()},
    )


def register(subparsers: argparse._SubParsersAction) -> None:
    group = subparsers.add_parser("auto", help="automorphisms of K<x,y,z>").add_subparsers(dest="action", required=True)
    p = add_command(group, "compose", compose_cmd, "compose two endomorphisms, (phi psi)(u) = phi(psi(u))")
    p.add_argument("phi", help='images separated by ";", e.g. "x + z*y ; y ; z"')
    p.add_argument("psi")
    p = add_command(group, "invert", invert, "invert a z-linear automorphism")
    p.add_argument("endo")
    p = add_command(group, "apply", apply, "apply an endomorphism to a polynomial")
    p.add_argument("endo")
    p.add_argument("f")
    p = add_command(group, "jz", jz_cmd, "J_z matrix of a z-linear endomorphism")
    p.add_argument("endo")
    p = add_command(group, "decide-linear", decide_linear, "decide z-tameness of a z-linear automorphism")
    p.add_argument("endo")
    p = add_command(group, "decide-zfix", decide_zfix, "wildness test for a z-fixing automorphism")
    p.add_argument("endo")
    p = add_command(group, "coordinates", coordinates, "decide both coordinates of a z-linear automorphism")
    p.add_argument("endo")


__all__ = ["register"]
