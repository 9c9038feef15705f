"""Shared builders for the test suites: parsing shortcuts and seeded random polynomials."""
from __future__ import annotations

import random
from fractions import Fraction

import orjson

from tamewild.algebra.context import XYZ, Z2, Context
from tamewild.algebra.cring import CPoly
from tamewild.algebra.napoly import NaPoly
from tamewild.algebra.ncpoly import NcPoly
from tamewild.algebra.parser import Mode, parse_endo, parse_poly
from tamewild.core.app import main


def nc(text: str, ctx: Context = XYZ) -> NcPoly:
    return parse_poly(text, ctx)


def cp(text: str, ctx: Context = Z2) -> CPoly:
    return parse_poly(text, ctx, Mode.COMMUTATIVE)


def na(text: str, ctx: Context = XYZ):
    return parse_poly(text, ctx, Mode.NONASSOCIATIVE)


def endo(text: str, ctx: Context = XYZ):
    return parse_endo(text, ctx)


def random_coefficient(rng: random.Random) -> Fraction:
    c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return c or Fraction(1)


def random_ncpoly(rng: random.Random, ctx: Context = XYZ, max_degree: int = 3, max_terms: int = 4) -> NcPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        word = tuple(rng.randrange(len(ctx)) for _ in range(rng.randint(0, max_degree)))
        terms[word] = random_coefficient(rng)
    return NcPoly(ctx, terms)


def random_homogeneous_cpoly(rng: random.Random, degree: int, ctx: Context = Z2) -> CPoly:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(0, degree)
        terms[(k, degree - k)] = random_coefficient(rng)
    poly = CPoly(ctx, terms)
    return poly if not poly.is_zero() else CPoly(ctx, {(degree, 0): 1})


def run_cli(capsys, *argv: str) -> tuple[int, dict]:
    """Run the CLI with --json and return (exit code, parsed stdout)."""
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, orjson.loads(out)


def random_cpoly(rng: random.Random, max_degree: int, ctx: Context = Z2) -> CPoly:
    """Sum of random homogeneous parts of degree 0..max_degree."""
    out = CPoly.zero(ctx)
    for degree in range(max_degree + 1):
        if rng.random() < 0.6:
            out = out + random_homogeneous_cpoly(rng, degree, ctx)
    return out


def random_napoly(rng: random.Random, names: list[str], max_degree: int, ctx: Context = XYZ, max_terms: int = 2):
    """Random element of K{X} over ``names``, bracketings included."""

    def monomial(degree: int) -> NaPoly:
        if degree == 1:
            return NaPoly.var(ctx, rng.choice(names))
        split = rng.randint(1, degree - 1)
        return monomial(split) * monomial(degree - split)

    out = NaPoly.zero(ctx)
    for _ in range(rng.randint(1, max_terms)):
        out = out + monomial(rng.randint(1, max_degree)).scale(random_coefficient(rng))
    if rng.random() < 0.3:
        out = out + random_coefficient(rng)
    return out
