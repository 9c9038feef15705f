"""Endomorphisms given by the images of the generators.

``Endo`` carries the bookkeeping shared by K<X> (``NcEndo``) and K{X}
(``NaEndo`` in napoly); subclasses only say how to substitute.
"""
from __future__ import annotations

from typing import ClassVar, Generic, Iterable, Iterator, Mapping, Sequence, TypeVar, Union

from tamewild.algebra.context import Context, same_context
from tamewild.algebra.ncpoly import NcPoly, substitute
from tamewild.core.errors import ContextMismatch, MissingImage

P = TypeVar("P")
E = TypeVar("E", bound="Endo")


class Endo(Generic[P]):
    """``phi = (f_1, ..., f_n)`` meaning ``phi(x_j) = f_j``."""

    __slots__ = ("context", "images")

    poly_type: ClassVar[type]

    def __init__(self, context: Context, images: Union[Mapping[str, P], Sequence[P]]):
        if isinstance(images, Mapping):
            missing = [n for n in context.names if n not in images]
            if missing:
                raise MissingImage(f"no image for {', '.join(missing)}")
            extra = [n for n in images if n not in context]
            if extra:
                raise ContextMismatch(f"images given for unknown variables {', '.join(extra)}")
            ordered = [images[n] for n in context.names]
        else:
            ordered = list(images)
            if len(ordered) != len(context):
                raise MissingImage(f"expected {len(context)} images, got {len(ordered)}")
        for img in ordered:
            if not isinstance(img, self.poly_type):
                raise ContextMismatch(f"{type(self).__name__} images must be {self.poly_type.__name__}")
            same_context(img.context, context)
        self.context = context
        self.images: tuple[P, ...] = tuple(ordered)

    def _substitute(self, f: P) -> P:
        raise NotImplementedError

    @classmethod
    def identity(cls: type[E], context: Context) -> E:
        return cls(context, [cls.poly_type.var(context, n) for n in context.names])

    def image(self, name: str) -> P:
        return self.images[self.context.index(name)]

    def as_mapping(self) -> dict[str, P]:
        return dict(zip(self.context.names, self.images))

    def apply(self, f: P) -> P:
        same_context(f.context, self.context)  # type: ignore[attr-defined]
        return self._substitute(f)

    def compose(self: E, other: E) -> E:
        """``(self other)(u) = self(other(u))``."""
        same_context(self.context, other.context)
        return type(self)(self.context, [self.apply(img) for img in other.images])

    def replace(self: E, **changes: P) -> E:
        mapping = self.as_mapping()
        mapping.update(changes)
        return type(self)(self.context, mapping)

    def is_identity(self) -> bool:
        return self == type(self).identity(self.context)

    def fixes(self, names: Iterable[str]) -> bool:
        return all(self.image(n) == self.poly_type.var(self.context, n) for n in names)

    def degree(self) -> int:
        return sum(max(img.degree(), 0) for img in self.images)  # type: ignore[attr-defined]

    def __iter__(self) -> Iterator[P]:
        return iter(self.images)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.context == other.context and self.images == other.images  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.context, self.images))

    def __str__(self) -> str:
        return " ; ".join(str(img) for img in self.images)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class NcEndo(Endo[NcPoly]):
    __slots__ = ()

    poly_type = NcPoly

    def _substitute(self, f: NcPoly) -> NcPoly:
        return substitute(f, self.as_mapping(), self.context)


__all__ = ["Endo", "NcEndo"]
