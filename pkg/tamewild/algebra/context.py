"""Variable contexts: ordered, named alphabets shared by all polynomial kinds."""
from __future__ import annotations

import re
from typing import Iterable, Iterator

from tamewild.core.errors import ContextMismatch, UnknownVariable

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Context:
    """An ordered tuple of variable names; the order fixes every monomial order."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise UnknownVariable(f"duplicate variable names in {names}")
        for n in names:
            if not _NAME.match(n):
                raise UnknownVariable(f"invalid variable name {n!r}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    @classmethod
    def parse(cls, text: str) -> "Context":
        return cls(part.strip() for part in text.split(",") if part.strip())

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r} (context: {', '.join(self.names)})") from None

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Context) and self.names == other.names

    def __hash__(self) -> int:
        return hash(("Context", self.names))

    def __repr__(self) -> str:
        return f"Context({', '.join(self.names)})"


def same_context(a: Context, b: Context) -> Context:
    if a != b:
        raise ContextMismatch(f"{a!r} vs {b!r}")
    return a


XYZ = Context(("x", "y", "z"))
Z2 = Context(("z1", "z2"))

__all__ = ["Context", "same_context", "XYZ", "Z2"]
