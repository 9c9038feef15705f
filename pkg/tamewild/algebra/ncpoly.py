"""Exact arithmetic in the free associative algebra K<X> over Q.

Words are tuples of variable indices into the polynomial's ``Context``;
terms are stored as a word -> Fraction map without zero coefficients and
iterated in degree-lexicographic order.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from tamewild.algebra.context import Context, Z2, same_context
from tamewild.algebra.cring import CPoly
from tamewild.algebra.field import Scalar, format_term, is_scalar, join_terms, to_rational
from tamewild.core.errors import ContextMismatch, MissingImage, NotXYLinear

Word = tuple[int, ...]


def deglex_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


class NcPoly:
    __slots__ = ("context", "_terms")

    def __init__(self, context: Context, terms: Mapping[Word, Scalar] | None = None):
        self.context = context
        n = len(context)
        clean: dict[Word, Fraction] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if any(not 0 <= i < n for i in word):
                raise ContextMismatch(f"word {word} uses letters outside {context!r}")
            c = to_rational(coeff)
            if c:
                clean[word] = clean.get(word, Fraction(0)) + c
        self._terms = {w: c for w, c in clean.items() if c}

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, context: Context) -> "NcPoly":
        return cls(context)

    @classmethod
    def constant(cls, context: Context, c: Scalar) -> "NcPoly":
        return cls(context, {(): c})

    @classmethod
    def one(cls, context: Context) -> "NcPoly":
        return cls.constant(context, 1)

    @classmethod
    def var(cls, context: Context, name: str) -> "NcPoly":
        return cls(context, {(context.index(name),): 1})

    @classmethod
    def word(cls, context: Context, names: Iterable[str], coeff: Scalar = 1) -> "NcPoly":
        return cls(context, {tuple(context.index(n) for n in names): coeff})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    def terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: deglex_key(item[0]))

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for zero."""
        return max((len(w) for w in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((len(w) for w in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.coefficient(())

    def variables(self) -> set[str]:
        return {self.context.names[i] for w in self._terms for i in w}

    def depends_on(self, names: Iterable[str]) -> bool:
        wanted = {self.context.index(n) for n in names if n in self.context}
        return any(i in wanted for w in self._terms for i in w)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _coerce(self, other: object) -> "NcPoly":
        if isinstance(other, NcPoly):
            same_context(self.context, other.context)
            return other
        if is_scalar(other):
            return NcPoly.constant(self.context, other)  # type: ignore[arg-type]
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "NcPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for w, c in o._terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return NcPoly(self.context, terms)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.context, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: object) -> "NcPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "NcPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "NcPoly":
        if is_scalar(other):
            return self.scale(other)  # type: ignore[arg-type]
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms: dict[Word, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in o._terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, Fraction(0)) + c1 * c2
        return NcPoly(self.context, terms)

    def __rmul__(self, other: object) -> "NcPoly":
        if is_scalar(other):
            return self.scale(other)  # type: ignore[arg-type]
        return NotImplemented

    def __pow__(self, k: int) -> "NcPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = NcPoly.one(self.context)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: Scalar) -> "NcPoly":
        c = to_rational(c)
        return NcPoly(self.context, {w: c * v for w, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NcPoly):
            return self.context == other.context and self._terms == other._terms
        if is_scalar(other):
            return self._terms == NcPoly.constant(self.context, other)._terms  # type: ignore[arg-type]
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    # Printing
    # ------------------------------------------------------------------
    def format_word(self, word: Word) -> str:
        parts: list[str] = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.context.names[word[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    def __str__(self) -> str:
        return join_terms(format_term(c, self.format_word(w)) for w, c in self.terms())

    def __repr__(self) -> str:
        return f"NcPoly({self})"


# ----------------------------------------------------------------------
# Module-level operations
# ----------------------------------------------------------------------
def add(f: NcPoly, g: NcPoly) -> NcPoly:
    same_context(f.context, g.context)
    return f + g


def mul(f: NcPoly, g: NcPoly) -> NcPoly:
    same_context(f.context, g.context)
    return f * g


def scale(f: NcPoly, c: Scalar) -> NcPoly:
    return f.scale(c)


def commutator(f: NcPoly, g: NcPoly) -> NcPoly:
    same_context(f.context, g.context)
    return f * g - g * f


def substitute(f: NcPoly, images: Mapping[str, NcPoly], target: Context | None = None) -> NcPoly:
    """Apply the endomorphism extension of ``images`` to ``f``."""
    if target is None:
        contexts = {img.context for img in images.values()}
        if len(contexts) > 1:
            raise ContextMismatch("images live in different contexts")
        target = contexts.pop() if contexts else f.context
    resolved: list[NcPoly | None] = []
    for name in f.context.names:
        img = images.get(name)
        if img is not None:
            same_context(img.context, target)
        resolved.append(img)
    out: dict[Word, Fraction] = {}
    for word, coeff in f.terms():
        acc = NcPoly.constant(target, coeff)
        for letter in word:
            img = resolved[letter]
            if img is None:
                raise MissingImage(f"no image for {f.context.names[letter]!r}")
            acc = acc * img
        for w, c in acc._terms.items():
            out[w] = out.get(w, Fraction(0)) + c
    return NcPoly(target, out)


def homogeneous_component(f: NcPoly, d: int, variables: Iterable[str] | None = None) -> NcPoly:
    """Terms of ``f`` whose degree counted in ``variables`` (default all) equals ``d``."""
    if variables is None:
        return NcPoly(f.context, {w: c for w, c in f._terms.items() if len(w) == d})
    idx = {f.context.index(n) for n in variables}
    return NcPoly(f.context, {w: c for w, c in f._terms.items() if sum(1 for i in w if i in idx) == d})


def z_sandwich(q: CPoly, w: NcPoly, z: str = "z") -> NcPoly:
    """``q(L,R)·w = sum q_pq z^p w z^q`` for q in K[z1, z2]."""
    if len(q.context) != 2:
        raise ContextMismatch("sandwich coefficients live in K[z1, z2]")
    zv = NcPoly.var(w.context, z)
    out = NcPoly.zero(w.context)
    for (p, r), c in q.terms():
        out = out + (zv**p * w * zv**r).scale(c)
    return out


class XYLinearForm(NamedTuple):
    a: CPoly
    b: CPoly
    tail: NcPoly

    def reconstitute(self, x: str = "x", y: str = "y", z: str = "z") -> NcPoly:
        ctx = self.tail.context
        return (
            z_sandwich(self.a, NcPoly.var(ctx, x), z)
            + z_sandwich(self.b, NcPoly.var(ctx, y), z)
            + self.tail
        )


def xy_linear_decompose(f: NcPoly, x: str = "x", y: str = "y", z: str = "z") -> XYLinearForm:
    ctx = f.context
    ix, iy, iz = ctx.index(x), ctx.index(y), ctx.index(z)
    a: dict[tuple[int, int], Fraction] = {}
    b: dict[tuple[int, int], Fraction] = {}
    tail: dict[Word, Fraction] = {}
    for word, coeff in f.terms():
        positions = [k for k, letter in enumerate(word) if letter in (ix, iy)]
        if any(letter not in (ix, iy, iz) for letter in word):
            raise NotXYLinear(f"monomial {f.format_word(word)} uses a variable outside {x}, {y}, {z}")
        if len(positions) > 1:
            raise NotXYLinear(f"monomial {f.format_word(word)} has degree > 1 in {x}, {y}")
        if not positions:
            tail[word] = coeff
            continue
        k = positions[0]
        key = (k, len(word) - k - 1)
        target = a if word[k] == ix else b
        target[key] = target.get(key, Fraction(0)) + coeff
    return XYLinearForm(CPoly(Z2, a), CPoly(Z2, b), NcPoly(ctx, tail))


__all__ = [
    "Word",
    "NcPoly",
    "deglex_key",
    "add",
    "mul",
    "scale",
    "commutator",
    "substitute",
    "homogeneous_component",
    "z_sandwich",
    "XYLinearForm",
    "xy_linear_decompose",
]
