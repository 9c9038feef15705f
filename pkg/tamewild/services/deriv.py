"""Derivative calculi on K<X>.

- Dicks-Lewin derivatives valued in K<X> (x) K<X>^op (``TensorPoly``)
- metabelian derivatives valued in K[U, V]
- left and right Fox derivatives valued in K<X>

A tensor ``u (x) v`` keeps ``v`` in the reading order of K<X>. Acting on
the right by g appends g to v, acting on the left by f prepends f to u,
so ``d(fg) = d(f).right_act(g) + d(g).left_act(f)``.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Mapping

from tamewild.algebra.context import Context, same_context
from tamewild.algebra.cring import CPoly
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.field import Scalar, format_term, join_terms, to_rational
from tamewild.algebra.ncpoly import NcPoly, Word, deglex_key
from tamewild.core.errors import ContextMismatch

WordPair = tuple[Word, Word]


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class TensorPoly:
    __slots__ = ("context", "_terms")

    def __init__(self, context: Context, terms: Mapping[WordPair, Scalar] | None = None):
        self.context = context
        clean: dict[WordPair, Fraction] = {}
        for (u, v), coeff in (terms or {}).items():
            c = to_rational(coeff)
            if c:
                key = (tuple(u), tuple(v))
                clean[key] = clean.get(key, Fraction(0)) + c
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def zero(cls, context: Context) -> "TensorPoly":
        return cls(context)

    @classmethod
    def unit(cls, context: Context) -> "TensorPoly":
        return cls(context, {((), ()): 1})

    @classmethod
    def pure(cls, left: NcPoly, right: NcPoly) -> "TensorPoly":
        same_context(left.context, right.context)
        terms: dict[WordPair, Fraction] = {}
        for u, cu in left.terms():
            for v, cv in right.terms():
                terms[(u, v)] = terms.get((u, v), Fraction(0)) + cu * cv
        return cls(left.context, terms)

    def terms(self) -> list[tuple[WordPair, Fraction]]:
        return sorted(
            self._terms.items(),
            key=lambda item: (len(item[0][0]) + len(item[0][1]), deglex_key(item[0][0]), deglex_key(item[0][1])),
        )

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        same_context(self.context, other.context)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return TensorPoly(self.context, terms)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly(self.context, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def scale(self, c: Scalar) -> "TensorPoly":
        c = to_rational(c)
        return TensorPoly(self.context, {k: c * v for k, v in self._terms.items()})

    def left_act(self, f: NcPoly) -> "TensorPoly":
        """``f . (u (x) v) = fu (x) v``."""
        same_context(self.context, f.context)
        terms: dict[WordPair, Fraction] = {}
        for (u, v), c in self._terms.items():
            for w, cw in f.terms():
                key = (w + u, v)
                terms[key] = terms.get(key, Fraction(0)) + c * cw
        return TensorPoly(self.context, terms)

    def right_act(self, g: NcPoly) -> "TensorPoly":
        """``(u (x) v) . (1 (x) g) = u (x) vg`` since the right factor multiplies in the opposite algebra."""
        same_context(self.context, g.context)
        terms: dict[WordPair, Fraction] = {}
        for (u, v), c in self._terms.items():
            for w, cw in g.terms():
                key = (u, v + w)
                terms[key] = terms.get(key, Fraction(0)) + c * cw
        return TensorPoly(self.context, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self._terms.items())))

    def __str__(self) -> str:
        formatter = NcPoly.zero(self.context)

        def side(w: Word) -> str:
            return formatter.format_word(w) or "1"

        return join_terms(format_term(c, f"{side(u)}⊗{side(v)}") for (u, v), c in self.terms())

    def __repr__(self) -> str:
        return f"TensorPoly({self})"


class UVContext:
    """Doubles every generator: x -> (x1, x2), y -> (y1, y2), ..."""

    __slots__ = ("source", "context")

    def __init__(self, source: Context):
        self.source = source
        self.context = Context([f"{n}1" for n in source.names] + [f"{n}2" for n in source.names])

    def u(self, name: str) -> CPoly:
        return CPoly.var(self.context, f"{name}1")

    def v(self, name: str) -> CPoly:
        return CPoly.var(self.context, f"{name}2")

    def monomial(self, left: Word, right: Word) -> tuple[int, ...]:
        n = len(self.source)
        exps = [0] * (2 * n)
        for i in left:
            exps[i] += 1
        for i in right:
            exps[n + i] += 1
        return tuple(exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UVContext) and self.source == other.source

    def __hash__(self) -> int:
        return hash(("UV", self.source))


# -------------------------------------------------
# Dicks-Lewin
# -------------------------------------------------
def dicks_lewin(f: NcPoly, var: str) -> TensorPoly:
    i = f.context.index(var)
    terms: dict[WordPair, Fraction] = {}
    for word, c in f.terms():
        for k, letter in enumerate(word):
            if letter == i:
                key = (word[:k], word[k + 1 :])
                terms[key] = terms.get(key, Fraction(0)) + c
    return TensorPoly(f.context, terms)


def jacobian_dl(phi: NcEndo) -> list[list[TensorPoly]]:
    """Entry (i, j) is the derivative of phi(x_j) by x_i."""
    names = phi.context.names
    return [[dicks_lewin(phi.images[j], names[i]) for j in range(len(names))] for i in range(len(names))]


def tensor_to_uv(t: TensorPoly, uv: UVContext) -> CPoly:
    if t.context != uv.source:
        raise ContextMismatch("tensor and UV context disagree")
    terms: dict[tuple[int, ...], Fraction] = {}
    for (u, v), c in t.terms():
        key = uv.monomial(u, v)
        terms[key] = terms.get(key, Fraction(0)) + c
    return CPoly(uv.context, terms)


# -------------------------------------------------
# Metabelian
# -------------------------------------------------
def metab_derivative(f: NcPoly, var: str, uv: UVContext) -> CPoly:
    if f.context != uv.source:
        raise ContextMismatch("polynomial and UV context disagree")
    i = f.context.index(var)
    terms: dict[tuple[int, ...], Fraction] = {}
    for word, c in f.terms():
        for k, letter in enumerate(word):
            if letter == i:
                key = uv.monomial(word[:k], word[k + 1 :])
                terms[key] = terms.get(key, Fraction(0)) + c
    return CPoly(uv.context, terms)


def abelianize(f: NcPoly) -> CPoly:
    """Image of f in the commutative polynomial algebra on the same names."""
    n = len(f.context)
    terms: dict[tuple[int, ...], Fraction] = {}
    for word, c in f.terms():
        exps = [0] * n
        for letter in word:
            exps[letter] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + c
    return CPoly(f.context, terms)


# -------------------------------------------------
# Fox
# -------------------------------------------------
def fox_right(f: NcPoly, var: str) -> NcPoly:
    """Coefficient f_i in ``f = sum x_i f_i + f(0)``."""
    i = f.context.index(var)
    return NcPoly(f.context, {w[1:]: c for w, c in f.terms() if w and w[0] == i})


def fox_left(f: NcPoly, var: str) -> NcPoly:
    """Coefficient f_i in ``f = sum f_i x_i + f(0)``."""
    i = f.context.index(var)
    return NcPoly(f.context, {w[:-1]: c for w, c in f.terms() if w and w[-1] == i})


def fox(f: NcPoly, var: str, side: Side | str) -> NcPoly:
    return fox_right(f, var) if Side(side) is Side.RIGHT else fox_left(f, var)


def jacobian_fox(phi: NcEndo, side: Side | str) -> list[list[NcPoly]]:
    names = phi.context.names
    return [[fox(phi.images[j], names[i], side) for j in range(len(names))] for i in range(len(names))]


__all__ = [
    "Side",
    "TensorPoly",
    "UVContext",
    "dicks_lewin",
    "jacobian_dl",
    "tensor_to_uv",
    "metab_derivative",
    "abelianize",
    "fox_right",
    "fox_left",
    "fox",
    "jacobian_fox",
]
