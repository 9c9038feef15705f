"""The absolutely free (nonassociative) algebra K{X}.

A nonassociative word is an ``int`` leaf (a variable index), the unit
``()``, or a pair ``(left, right)`` of non-unit words; ``(xx)x`` and
``x(xx)`` are different pairs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from tamewild.algebra.context import Context, same_context
from tamewild.algebra.cring import CPoly
from tamewild.algebra.field import Scalar, format_term, is_scalar, join_terms, to_rational
from tamewild.algebra.endo import Endo, NcEndo
from tamewild.algebra.ncpoly import NcPoly
from tamewild.core.errors import ContextMismatch, MissingImage, ZeroPolynomial

NaWord = Union[int, tuple]
UNIT: tuple = ()


def word_degree(w: NaWord) -> int:
    if isinstance(w, int):
        return 1
    if w == UNIT:
        return 0
    return word_degree(w[0]) + word_degree(w[1])


def word_shape(w: NaWord) -> str:
    if isinstance(w, int):
        return "."
    if w == UNIT:
        return ""
    return "(" + word_shape(w[0]) + word_shape(w[1]) + ")"


def word_leaves(w: NaWord) -> tuple[int, ...]:
    if isinstance(w, int):
        return (w,)
    if w == UNIT:
        return ()
    return word_leaves(w[0]) + word_leaves(w[1])


def word_key(w: NaWord) -> tuple:
    return (word_degree(w), word_shape(w), word_leaves(w))


def word_product(a: NaWord, b: NaWord) -> NaWord:
    if a == UNIT:
        return b
    if b == UNIT:
        return a
    return (a, b)


def _check_word(w: NaWord, n: int) -> None:
    if isinstance(w, int):
        if not 0 <= w < n:
            raise ContextMismatch(f"leaf {w} outside context")
        return
    if w == UNIT:
        return
    if not isinstance(w, tuple) or len(w) != 2 or UNIT in w:
        raise ContextMismatch(f"malformed nonassociative word {w!r}")
    _check_word(w[0], n)
    _check_word(w[1], n)


class NaPoly:
    __slots__ = ("context", "_terms")

    def __init__(self, context: Context, terms: Mapping[NaWord, Scalar] | None = None):
        self.context = context
        clean: dict[NaWord, Fraction] = {}
        for w, coeff in (terms or {}).items():
            _check_word(w, len(context))
            c = to_rational(coeff)
            if c:
                clean[w] = clean.get(w, Fraction(0)) + c
        self._terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def zero(cls, context: Context) -> "NaPoly":
        return cls(context)

    @classmethod
    def constant(cls, context: Context, c: Scalar) -> "NaPoly":
        return cls(context, {UNIT: c})

    @classmethod
    def one(cls, context: Context) -> "NaPoly":
        return cls.constant(context, 1)

    @classmethod
    def var(cls, context: Context, name: str) -> "NaPoly":
        return cls(context, {context.index(name): 1})

    # ------------------------------------------------------------------
    def terms(self) -> list[tuple[NaWord, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: word_key(item[0]))

    def coefficient(self, w: NaWord) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((word_degree(w) for w in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.coefficient(UNIT)

    def is_homogeneous(self) -> bool:
        return len({word_degree(w) for w in self._terms}) <= 1

    def homogeneous_component(self, d: int) -> "NaPoly":
        return NaPoly(self.context, {w: c for w, c in self._terms.items() if word_degree(w) == d})

    def variables(self) -> set[str]:
        return {self.context.names[i] for w in self._terms for i in word_leaves(w)}

    def depends_on(self, names: Iterable[str]) -> bool:
        return bool(self.variables() & set(names))

    # ------------------------------------------------------------------
    def _coerce(self, other: object) -> "NaPoly":
        if isinstance(other, NaPoly):
            same_context(self.context, other.context)
            return other
        if is_scalar(other):
            return NaPoly.constant(self.context, other)  # type: ignore[arg-type]
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "NaPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for w, c in o._terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return NaPoly(self.context, terms)

    __radd__ = __add__

    def __neg__(self) -> "NaPoly":
        return NaPoly(self.context, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: object) -> "NaPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "NaPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "NaPoly":
        if is_scalar(other):
            return self.scale(other)  # type: ignore[arg-type]
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms: dict[NaWord, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in o._terms.items():
                w = word_product(w1, w2)
                terms[w] = terms.get(w, Fraction(0)) + c1 * c2
        return NaPoly(self.context, terms)

    def __rmul__(self, other: object) -> "NaPoly":
        if is_scalar(other):
            return self.scale(other)  # type: ignore[arg-type]
        return NotImplemented

    def scale(self, c: Scalar) -> "NaPoly":
        c = to_rational(c)
        return NaPoly(self.context, {w: c * v for w, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NaPoly):
            return self.context == other.context and self._terms == other._terms
        if is_scalar(other):
            return self._terms == NaPoly.constant(self.context, other)._terms  # type: ignore[arg-type]
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    def substitute(self, images: Mapping[str, "NaPoly"], target: Context | None = None) -> "NaPoly":
        if target is None:
            contexts = {img.context for img in images.values()}
            if len(contexts) > 1:
                raise ContextMismatch("images live in different contexts")
            target = contexts.pop() if contexts else self.context
        cache: dict[NaWord, NaPoly] = {}

        def evaluate(w: NaWord) -> NaPoly:
            if w in cache:
                return cache[w]
            if w == UNIT:
                value = NaPoly.one(target)
            elif isinstance(w, int):
                name = self.context.names[w]
                if name not in images:
                    raise MissingImage(f"no image for {name!r}")
                value = images[name]
                same_context(value.context, target)
            else:
                value = evaluate(w[0]) * evaluate(w[1])
            cache[w] = value
            return value

        out = NaPoly.zero(target)
        for w, c in self.terms():
            out = out + evaluate(w).scale(c)
        return out

    def flatten(self) -> NcPoly:
        """Image under the natural map K{X} -> K<X>."""
        terms: dict[tuple[int, ...], Fraction] = {}
        for w, c in self._terms.items():
            key = word_leaves(w)
            terms[key] = terms.get(key, Fraction(0)) + c
        return NcPoly(self.context, terms)

    def abelianize(self) -> CPoly:
        terms: dict[tuple[int, ...], Fraction] = {}
        n = len(self.context)
        for w, c in self._terms.items():
            exps = [0] * n
            for i in word_leaves(w):
                exps[i] += 1
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + c
        return CPoly(self.context, terms)

    def split_component(self, p: int) -> dict[tuple[NaWord, NaWord], Fraction]:
        """Terms ``(l, r)`` with ``deg l = p``, as a map on pairs."""
        return {
            w: c
            for w, c in self._terms.items()
            if isinstance(w, tuple) and w != UNIT and word_degree(w[0]) == p
        }

    def leaf_component(self) -> dict[int, Fraction]:
        return {w: c for w, c in self._terms.items() if isinstance(w, int)}

    # ------------------------------------------------------------------
    def format_word(self, w: NaWord, nested: bool = False) -> str:
        if isinstance(w, int):
            return self.context.names[w]
        if w == UNIT:
            return ""
        body = f"{self.format_word(w[0], True)}*{self.format_word(w[1], True)}"
        return f"({body})" if nested else body

    def __str__(self) -> str:
        return join_terms(format_term(c, self.format_word(w)) for w, c in self.terms())

    def __repr__(self) -> str:
        return f"NaPoly({self})"


def leading_form(f: NaPoly) -> NaPoly:
    if f.is_zero():
        raise ZeroPolynomial("leading form of 0")
    return f.homogeneous_component(f.degree())


class NaExpression:
    """A polynomial in generator slots; evaluates to an NaPoly once slots get values."""

    __slots__ = ("poly",)

    def __init__(self, poly: NaPoly):
        self.poly = poly

    @property
    def slots(self) -> Context:
        return self.poly.context

    def evaluate(self, values: Mapping[str, NaPoly], target: Context | None = None) -> NaPoly:
        return self.poly.substitute(values, target)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NaExpression) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __str__(self) -> str:
        return str(self.poly)

    def __repr__(self) -> str:
        return f"NaExpression({self})"


class NaEndo(Endo[NaPoly]):
    """Endomorphism of K{X} by generator images."""

    __slots__ = ()

    poly_type = NaPoly

    def _substitute(self, f: NaPoly) -> NaPoly:
        return f.substitute(self.as_mapping(), self.context)

    def flatten(self) -> NcEndo:
        return NcEndo(self.context, [img.flatten() for img in self.images])


__all__ = [
    "NaWord",
    "UNIT",
    "NaPoly",
    "NaEndo",
    "NaExpression",
    "leading_form",
    "word_degree",
    "word_key",
    "word_leaves",
    "word_product",
]
