"""Coefficient field and exact linear algebra over it.

Coefficients are ``fractions.Fraction``; linear systems are handed to
sympy's ``DomainMatrix`` over ``QQ`` and converted back.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Scalar = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"unsupported coefficient {value!r}")


def is_scalar(value: object) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_term(coeff: Fraction, monomial: str) -> str:
    """Render ``coeff * monomial``; an empty monomial is the unit."""
    if not monomial:
        return format_rational(coeff)
    if coeff == 1:
        return monomial
    if coeff == -1:
        return f"-{monomial}"
    return f"{format_rational(coeff)}*{monomial}"


def join_terms(rendered: Iterable[str]) -> str:
    out = ""
    for term in rendered:
        if not out:
            out = term
        elif term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out or "0"


# -------------------------------------------------
# Linear systems
# -------------------------------------------------
def to_qq(c: Fraction):
    return QQ(c.numerator, c.denominator)


def from_qq(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    if not rows or ncols == 0:
        return [], ()
    dm = DomainMatrix.from_list([[to_qq(c) for c in row] for row in rows], QQ)
    reduced, pivots = dm.rref()
    return [[from_qq(c) for c in row] for row in reduced.to_list()], tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    _, pivots = _rref(rows, ncols)
    return len(pivots)


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : rows · v = 0}``, one free variable set to 1 per vector."""
    reduced, pivots = _rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis: list[list[Fraction]] = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(vec)
    return basis


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int) -> list[Fraction] | None:
    """One solution of ``rows · v = rhs`` (free variables zero), or None."""
    if not rows:
        return [ZERO] * ncols if all(c == 0 for c in rhs) else None
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    reduced, pivots = _rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [ZERO] * ncols
    for r, p in enumerate(pivots):
        solution[p] = reduced[r][ncols]
    return solution


__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "to_rational",
    "to_qq",
    "from_qq",
    "is_scalar",
    "format_rational",
    "format_term",
    "join_terms",
    "rank",
    "nullspace",
    "solve",
]
