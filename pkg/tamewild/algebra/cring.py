"""Commutative polynomials over Q and small matrices over them.

``CPoly`` wraps an element of sympy's sparse ``PolyRing`` over ``QQ``
(graded lex order) and houses the elements of K[z1, z2] and K[U, V];
``CMatrix`` the 2x2 and 3x3 Jacobian-type matrices built from them.
Determinants and adjugates go through ``DomainMatrix`` over the ring.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from tamewild.algebra.context import Context, same_context
from tamewild.algebra.field import (
    Scalar,
    format_term,
    from_qq,
    is_scalar,
    join_terms,
    to_qq,
    to_rational,
)
from tamewild.core.errors import ContextMismatch, NotHomogeneous, NotInvertible, ZeroPolynomial

Exponents = tuple[int, ...]


@lru_cache(maxsize=None)
def poly_ring(context: Context) -> PolyRing:
    """Q[context] with graded lex order; the context order fixes the generator order."""
    if not len(context):
        raise ContextMismatch("commutative polynomials need at least one variable")
    return ring(",".join(context.names), QQ, grlex)[0]


@lru_cache(maxsize=None)
def poly_domain(context: Context):
    return poly_ring(context).to_domain()


def _display_key(e: Exponents) -> tuple:
    # ascending degree, then z1^2 before z1*z2 before z2^2
    return (sum(e), tuple(-k for k in e))


class CPoly:
    __slots__ = ("context", "poly")

    def __init__(self, context: Context, terms: Mapping[Exponents, Scalar] | None = None):
        self.context = context
        clean: dict[Exponents, Fraction] = {}
        n = len(context)
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ContextMismatch(f"exponent vector {exps} does not fit {context!r}")
            clean[exps] = clean.get(exps, Fraction(0)) + to_rational(coeff)
        self.poly: PolyElement = poly_ring(context).from_dict({e: to_qq(c) for e, c in clean.items() if c})

    @classmethod
    def wrap(cls, context: Context, poly: PolyElement) -> "CPoly":
        if poly.ring != poly_ring(context):
            raise ContextMismatch(f"{poly.ring} is not the ring of {context!r}")
        out = cls.__new__(cls)
        out.context = context
        out.poly = poly
        return out

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, context: Context) -> "CPoly":
        return cls.wrap(context, poly_ring(context).zero)

    @classmethod
    def constant(cls, context: Context, c: Scalar) -> "CPoly":
        return cls.wrap(context, poly_ring(context).ground_new(to_qq(to_rational(c))))

    @classmethod
    def one(cls, context: Context) -> "CPoly":
        return cls.wrap(context, poly_ring(context).one)

    @classmethod
    def var(cls, context: Context, name: str) -> "CPoly":
        return cls.wrap(context, poly_ring(context).gens[context.index(name)])

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    def terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(((m, from_qq(c)) for m, c in self.poly.iterterms()), key=lambda item: _display_key(item[0]))

    def coefficient(self, exps: Exponents) -> Fraction:
        return from_qq(self.poly.get(tuple(exps), QQ.zero))

    def is_zero(self) -> bool:
        return not self.poly

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.poly:
            return -1
        # graded order: the leading monomial has the top total degree
        return sum(self.poly.LM)

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def constant_term(self) -> Fraction:
        return from_qq(self.poly.coeff(1))

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.poly.itermonoms()}) <= 1

    def homogeneous_component(self, d: int) -> "CPoly":
        part = self.poly.ring.from_terms([(m, c) for m, c in self.poly.iterterms() if sum(m) == d])
        return CPoly.wrap(self.context, part)

    def variables(self) -> set[str]:
        used: set[str] = set()
        for m in self.poly.itermonoms():
            used.update(self.context.names[i] for i, k in enumerate(m) if k)
        return used

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _coerce(self, other: object) -> "CPoly":
        if isinstance(other, CPoly):
            same_context(self.context, other.context)
            return other
        if is_scalar(other):
            return CPoly.constant(self.context, other)  # type: ignore[arg-type]
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "CPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CPoly.wrap(self.context, self.poly + o.poly)

    __radd__ = __add__

    def __neg__(self) -> "CPoly":
        return CPoly.wrap(self.context, -self.poly)

    def __sub__(self, other: object) -> "CPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CPoly.wrap(self.context, self.poly - o.poly)

    def __rsub__(self, other: object) -> "CPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "CPoly":
        if is_scalar(other):
            return self.scale(other)  # type: ignore[arg-type]
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CPoly.wrap(self.context, self.poly * o.poly)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return CPoly.wrap(self.context, self.poly**k)

    def scale(self, c: Scalar) -> "CPoly":
        return CPoly.wrap(self.context, self.poly.mul_ground(to_qq(to_rational(c))))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CPoly):
            return self.context == other.context and self.poly == other.poly
        if is_scalar(other):
            return self.poly == CPoly.constant(self.context, other).poly  # type: ignore[arg-type]
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.poly.iterterms())))

    # ------------------------------------------------------------------
    # Substitution
    # ------------------------------------------------------------------
    def substitute(self, images: Mapping[str, "CPoly"], target: Context) -> "CPoly":
        """Apply the algebra map sending each variable to ``images[name]``.

        Variables without an image are kept when ``target`` knows them.
        """
        values = []
        for name in self.context.names:
            image = images.get(name)
            if image is None:
                image = CPoly.var(target, name) if name in target else None
            else:
                same_context(image.context, target)
            values.append(image)
        if target == self.context:
            pairs = [(gen, v.poly) for gen, v in zip(self.poly.ring.gens, values) if v is not None]
            return CPoly.wrap(target, self.poly.compose(pairs) if pairs else self.poly)
        target_ring = poly_ring(target)
        out = target_ring.zero
        for exps, coeff in self.poly.iterterms():
            term = target_ring.ground_new(coeff)
            for i, k in enumerate(exps):
                if not k:
                    continue
                if values[i] is None:
                    raise ContextMismatch(f"no image for {self.context.names[i]} in {target!r}")
                term = term * values[i].poly ** k
            out = out + term
        return CPoly.wrap(target, out)

    def specialize(self, values: Mapping[str, Union["CPoly", Scalar]]) -> "CPoly":
        """Substitute some variables inside the same context."""
        images = {
            name: (v if isinstance(v, CPoly) else CPoly.constant(self.context, v))
            for name, v in values.items()
        }
        return self.substitute(images, self.context)

    def embed(self, target: Context) -> "CPoly":
        """Rename into ``target`` by variable name; unused variables may be dropped."""
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms():
            new = [0] * len(target)
            for i, k in enumerate(exps):
                if k:
                    new[target.index(self.context.names[i])] = k
            terms[tuple(new)] = coeff
        return CPoly(target, terms)

    # ------------------------------------------------------------------
    # Printing
    # ------------------------------------------------------------------
    def _monomial(self, exps: Exponents) -> str:
        parts = []
        for i, k in enumerate(exps):
            if k == 1:
                parts.append(self.context.names[i])
            elif k > 1:
                parts.append(f"{self.context.names[i]}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        return join_terms(format_term(c, self._monomial(e)) for e, c in self.terms())

    def __repr__(self) -> str:
        return f"CPoly({self})"


# ----------------------------------------------------------------------
# Leading forms and exact division
# ----------------------------------------------------------------------
def leading_form(p: CPoly) -> CPoly:
    if p.is_zero():
        raise ZeroPolynomial("leading form of 0")
    return p.homogeneous_component(p.degree())


def exact_divide_homogeneous(n: CPoly, d: CPoly) -> CPoly | None:
    """Return q with ``n = d*q`` or None.

    A single divisor is a Groebner basis of its ideal, so a zero remainder
    from ``exquo`` decides divisibility; divisors need not be monomials.
    """
    same_context(n.context, d.context)
    if d.is_zero():
        raise ZeroPolynomial("division by 0")
    if not n.is_homogeneous() or not d.is_homogeneous():
        raise NotHomogeneous("exact homogeneous division needs homogeneous operands")
    if n.is_zero():
        return CPoly.zero(n.context)
    if n.degree() < d.degree():
        return None
    try:
        return CPoly.wrap(n.context, n.poly.exquo(d.poly))
    except ExactQuotientFailed:
        return None


def is_unit(p: CPoly) -> bool:
    return not p.is_zero() and p.is_constant()


# ----------------------------------------------------------------------
# Matrices
# ----------------------------------------------------------------------
class CMatrix:
    """Square 2x2 or 3x3 grid of CPoly sharing one context."""

    __slots__ = ("context", "rows")

    def __init__(self, rows: Sequence[Sequence[CPoly]]):
        n = len(rows)
        if n not in (2, 3) or any(len(r) != n for r in rows):
            raise ContextMismatch("matrices are 2x2 or 3x3")
        context = rows[0][0].context
        for r in rows:
            for entry in r:
                same_context(entry.context, context)
        self.context = context
        self.rows: tuple[tuple[CPoly, ...], ...] = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, context: Context, n: int = 2) -> "CMatrix":
        return cls(
            [[CPoly.one(context) if i == j else CPoly.zero(context) for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_scalars(cls, context: Context, rows: Sequence[Sequence[Scalar]]) -> "CMatrix":
        return cls([[CPoly.constant(context, c) for c in r] for r in rows])

    @classmethod
    def from_domain_matrix(cls, context: Context, dm: DomainMatrix) -> "CMatrix":
        return cls([[CPoly.wrap(context, e) for e in r] for r in dm.to_list()])

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(
            [[e.poly for e in r] for r in self.rows], (self.size, self.size), poly_domain(self.context)
        )

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> CPoly:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[CPoly, ...]:
        return tuple(r[j] for r in self.rows)

    def map(self, fn) -> "CMatrix":
        return CMatrix([[fn(e) for e in r] for r in self.rows])

    def __matmul__(self, other: "CMatrix") -> "CMatrix":
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_lists(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.rows]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "]"

    def __repr__(self) -> str:
        return f"CMatrix({self})"


def mat_mul(a: CMatrix, b: CMatrix) -> CMatrix:
    same_context(a.context, b.context)
    if a.size != b.size:
        raise ContextMismatch("matrix sizes differ")
    return CMatrix.from_domain_matrix(a.context, a.to_domain_matrix().matmul(b.to_domain_matrix()))


def det(m: CMatrix) -> CPoly:
    return CPoly.wrap(m.context, m.to_domain_matrix().det())


def mat_inverse_2x2_unit_det(m: CMatrix) -> CMatrix:
    if m.size != 2:
        raise NotInvertible("only 2x2 inverses are supported")
    adjugate, d = m.to_domain_matrix().adj_det()
    d = CPoly.wrap(m.context, d)
    if not is_unit(d):
        raise NotInvertible(f"determinant {d} is not a nonzero constant")
    return CMatrix.from_domain_matrix(m.context, adjugate).map(lambda e: e.scale(1 / d.constant_term()))


__all__ = [
    "Exponents",
    "CPoly",
    "CMatrix",
    "poly_ring",
    "poly_domain",
    "leading_form",
    "exact_divide_homogeneous",
    "is_unit",
    "det",
    "mat_mul",
    "mat_inverse_2x2_unit_det",
]
