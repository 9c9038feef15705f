"""Expression grammar shared by every polynomial kind.

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')' | '[' expr ',' expr ']'

Multiplication is always an explicit ``*``. In nonassociative mode a
product of more than two non-constant factors must be parenthesized and
``^`` is rejected.
"""
from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterator, NamedTuple, Sequence

from tamewild.algebra.context import Context
from tamewild.algebra.cring import CMatrix, CPoly
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.napoly import NaEndo, NaPoly
from tamewild.algebra.ncpoly import NcPoly
from tamewild.core.errors import ParseError, ResourceLimit, UnknownVariable
from tamewild.core.settings import get_settings


class Mode(str, Enum):
    ASSOCIATIVE = "associative"
    COMMUTATIVE = "commutative"
    NONASSOCIATIVE = "nonassociative"


_FACTORIES: dict[Mode, Any] = {
    Mode.ASSOCIATIVE: NcPoly,
    Mode.COMMUTATIVE: CPoly,
    Mode.NONASSOCIATIVE: NaPoly,
}


class Token(NamedTuple):
    type: str
    value: str
    where: tuple[int, int]


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()\[\],;])"
)


def tokenize(source: str) -> Iterator[Token]:
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", (pos, pos + 1), source)
        kind = m.lastgroup or ""
        if kind != "ws":
            yield Token(kind, m.group(), (m.start(), m.end()))
        pos = m.end()
    yield Token("end", "", (len(source), len(source)))


class Parser:
    def __init__(self, context: Context, mode: Mode | str = Mode.ASSOCIATIVE):
        self.context = context
        self.mode = Mode(mode)
        self.factory = _FACTORIES[self.mode]
        self.source = ""
        self.tokens: list[Token] = []
        self.pos = 0

    # -------------------------------------------------
    # Token helpers
    # -------------------------------------------------
    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self, value: str | None = None) -> Token:
        tok = self.token
        if value is not None and tok.value != value:
            found = tok.value or "end of input"
            raise ParseError(f"expected {value!r}, found {found!r}", tok.where, self.source)
        self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.token
        return ParseError(message, tok.where, self.source)

    # -------------------------------------------------
    # Entry points
    # -------------------------------------------------
    def parse(self, source: str) -> Any:
        self.source = source
        self.tokens = list(tokenize(source))
        self.pos = 0
        if self.token.type == "end":
            raise self.error("empty expression")
        value = self.expression()
        if self.token.type != "end":
            raise self.error(f"unexpected {self.token.value!r}")
        return value

    def expression(self) -> Any:
        value = self.term()
        while self.token.value in ("+", "-"):
            op = self.advance().value
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Any:
        factors = [(self.token, self.unary())]
        while self.token.value == "*":
            self.advance()
            factors.append((self.token, self.unary()))
        if len(factors) == 1:
            return factors[0][1]
        if self.mode is Mode.NONASSOCIATIVE:
            nonconstant = [(tok, f) for tok, f in factors if f.degree() > 0]
            if len(nonconstant) > 2:
                raise self.error("ambiguous nonassociative product; add parentheses", nonconstant[2][0])
        value = factors[0][1]
        for _, f in factors[1:]:
            value = value * f
        return value

    def unary(self) -> Any:
        if self.token.value == "-":
            self.advance()
            return -self.unary()
        if self.token.value == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Any:
        base = self.atom()
        if self.token.value == "^":
            caret = self.advance()
            if self.mode is Mode.NONASSOCIATIVE:
                raise self.error("powers are ambiguous in the nonassociative algebra", caret)
            tok = self.token
            if tok.type != "number":
                raise self.error("exponent must be a nonnegative integer")
            self.advance()
            k = int(tok.value)
            limit = get_settings().MAX_DEGREE
            if base.degree() * k > limit:
                raise ResourceLimit(
                    f"power of degree {base.degree() * k} at column {caret.where[0] + 1} exceeds MAX_DEGREE {limit}"
                )
            base = base**k
        return base

    def atom(self) -> Any:
        tok = self.token
        if tok.type == "number":
            self.advance()
            value = Fraction(int(tok.value))
            if self.token.value == "/":
                self.advance()
                den = self.token
                if den.type != "number":
                    raise self.error("rational literal needs an integer denominator")
                self.advance()
                if int(den.value) == 0:
                    raise self.error("zero denominator", den)
                value = Fraction(int(tok.value), int(den.value))
            return self.factory.constant(self.context, value)
        if tok.type == "name":
            self.advance()
            if tok.value not in self.context:
                raise UnknownVariable(
                    f"unknown variable {tok.value!r} at column {tok.where[0] + 1} "
                    f"(context: {', '.join(self.context.names)})"
                )
            return self.factory.var(self.context, tok.value)
        if tok.value == "(":
            self.advance()
            value = self.expression()
            self.advance(")")
            return value
        if tok.value == "[":
            self.advance()
            left = self.expression()
            self.advance(",")
            right = self.expression()
            self.advance("]")
            return left * right - right * left
        if tok.value == "/":
            raise self.error("division is only allowed inside rational literals p/q")
        raise self.error(f"unexpected {tok.value or 'end of input'!r}")


def parse_poly(text: str, context: Context, mode: Mode | str = Mode.ASSOCIATIVE) -> Any:
    return Parser(context, mode).parse(text)


def _split_top_level(text: str, sep: str) -> list[tuple[int, str]]:
    """Split on ``sep`` outside brackets, keeping each chunk's offset."""
    parts: list[tuple[int, str]] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    parts.append((start, text[start:]))
    return parts


def _parse_chunks(text: str, sep: str, parse: Callable[[str], Any]) -> list[Any]:
    values = []
    for offset, chunk in _split_top_level(text, sep):
        try:
            values.append(parse(chunk))
        except ParseError as exc:
            if exc.position is None:
                raise
            start, end = exc.position
            raise ParseError(exc.detail.rsplit(" at column", 1)[0], (start + offset, end + offset), text) from None
    return values


def parse_endo(text: str, context: Context) -> NcEndo:
    """Parse ``f ; g ; h`` into the endomorphism sending the i-th generator to the i-th image."""
    images = _parse_chunks(text, ";", lambda s: parse_poly(s, context, Mode.ASSOCIATIVE))
    return NcEndo(context, images)


def parse_na_endo(text: str, context: Context) -> NaEndo:
    images = _parse_chunks(text, ";", lambda s: parse_poly(s, context, Mode.NONASSOCIATIVE))
    return NaEndo(context, images)


def parse_matrix(text: str, context: Context) -> CMatrix:
    """Parse ``[[p, p], [p, p]]`` (or 3x3) over the commutative context."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("matrix literal must look like [[p,p],[p,p]]", (0, len(text)), text)
    inner = body[1:-1]
    rows: list[list[CPoly]] = []
    for offset, chunk in _split_top_level(inner, ","):
        row_text = chunk.strip()
        if not (row_text.startswith("[") and row_text.endswith("]")):
            raise ParseError("matrix row must be bracketed", (offset, offset + len(chunk)), text)
        rows.append(
            _parse_chunks(row_text[1:-1], ",", lambda s: parse_poly(s, context, Mode.COMMUTATIVE))
        )
    return CMatrix(rows)


def format_matrix(m: CMatrix) -> str:
    return "[" + ",".join("[" + ",".join(str(e) for e in row) + "]" for row in m.rows) + "]"


def parse_many(texts: Sequence[str], context: Context, mode: Mode | str) -> list[Any]:
    return [parse_poly(t, context, mode) for t in texts]


__all__ = [
    "Mode",
    "Token",
    "Parser",
    "tokenize",
    "parse_poly",
    "parse_endo",
    "parse_na_endo",
    "parse_matrix",
    "format_matrix",
    "parse_many",
]
