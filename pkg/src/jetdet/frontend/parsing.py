"""Polynomial expression parsing and canonical printing.

Grammar (whitespace ignored, no floating-point literals):

    expr    :=  [sign] term { ('+' | '-') term }
    term    :=  factor { '*' factor }
    factor  :=  base [ '^' INT ]          INT >= 1
    base    :=  NUMBER | NAME | '(' expr ')'
    NUMBER  :=  INT [ '/' INT ]           exact rational, nonzero denominator

Variable names are either declared explicitly or inferred: expressions over
x, y, z, w use as many of those as the furthest one mentioned; expressions
over x1, x2, ... use x1..xn up to the largest index mentioned.

The canonical text form orders terms by ascending total degree with x before
y inside a degree, uses explicit '*' and '^', and prints coefficients as
integers or p/q; parse and print are mutually inverse on canonical strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..polyring import Mono, Poly, grlex_key

_CANONICAL_NAMES = ("x", "y", "z", "w")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([+\-*/^()]))")


@dataclass(frozen=True, slots=True)
class PolySource:
    """An expression string plus the variables it is read over (None = infer)."""

    text: str
    variables: tuple[str, ...] | None = None


def default_names(nvars: int) -> tuple[str, ...]:
    """x, y, z, w for up to four variables; x1..xn beyond."""
    if nvars <= 4:
        return _CANONICAL_NAMES[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """(kind, value, position) triples; kinds: num, name, op."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", where)
        if m.group(1):
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


def identifiers_in(text: str) -> list[str]:
    """Identifiers as they appear, first occurrence first."""
    seen: list[str] = []
    for kind, value, _ in _tokenize(text):
        if kind == "name" and value not in seen:
            seen.append(value)
    return seen


def infer_variables(text: str) -> tuple[str, ...]:
    """Choose variable names covering every identifier in the expression."""
    idents = identifiers_in(text)
    if not idents:
        return ("x",)
    if all(name in _CANONICAL_NAMES for name in idents):
        count = max(_CANONICAL_NAMES.index(name) for name in idents) + 1
        return _CANONICAL_NAMES[:count]
    indexed = re.compile(r"x([1-9][0-9]*)$")
    matches = [indexed.match(name) for name in idents]
    if all(matches):
        count = max(int(m.group(1)) for m in matches)
        return tuple(f"x{i + 1}" for i in range(count))
    raise ParseError(
        f"cannot infer variables from {idents}; declare them explicitly "
        "(x, y, z, w or x1..xn are inferred automatically)"
    )


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables
        self.index = {name: i for i, name in enumerate(variables)}
        self.nvars = len(variables)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", len(self.text))
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}, found {tok[1]!r}", tok[2])

    def parse(self) -> Poly:
        p = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Poly:
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return acc
            self.take()
            nxt = self.term()
            acc = acc + nxt if tok[1] == "+" else acc - nxt

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != "*":
                return acc
            self.take()
            acc = acc * self.factor()

    def factor(self) -> Poly:
        base = self.base()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.take()
            etok = self.take()
            if etok[0] != "num":
                raise ParseError("exponent must be a positive integer", etok[2])
            exponent = int(etok[1])
            if exponent < 1:
                raise ParseError("exponent must be a positive integer", etok[2])
            return base**exponent
        return base

    def base(self) -> Poly:
        tok = self.take()
        kind, value, where = tok
        if kind == "num":
            numerator = int(value)
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self.take()
                dtok = self.take()
                if dtok[0] != "num":
                    raise ParseError("denominator must be an integer", dtok[2])
                denominator = int(dtok[1])
                if denominator == 0:
                    raise ParseError("zero denominator", dtok[2])
                return Poly.constant(self.nvars, Fraction(numerator, denominator))
            return Poly.constant(self.nvars, numerator)
        if kind == "name":
            idx = self.index.get(value)
            if idx is None:
                raise ParseError(
                    f"unknown identifier {value!r}; variables are {list(self.variables)}",
                    where,
                )
            return Poly.variable(self.nvars, idx)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {value!r}", where)


def parse_poly(
    src: str | PolySource,
    variables: tuple[str, ...] | list[str] | None = None,
    nvars: int | None = None,
) -> Poly:
    """Parse an expression into a Poly over declared or inferred variables."""
    if isinstance(src, PolySource):
        text = src.text
        if variables is None:
            variables = src.variables
    else:
        text = src
    if variables is not None:
        names = tuple(variables)
    elif nvars is not None:
        names = default_names(nvars)
    else:
        names = infer_variables(text)
    return _Parser(text, names).parse()


def poly_to_str(p: Poly, variables: tuple[str, ...] | list[str] | None = None) -> str:
    """Canonical text form; parse_poly(poly_to_str(p)) == p with the same names."""
    names = tuple(variables) if variables is not None else default_names(p.nvars)
    if len(names) != p.nvars:
        raise ValueError(f"{len(names)} names for {p.nvars} variables")
    if p.is_zero:
        return "0"
    chunks: list[str] = []
    for mono, coeff in p.terms():
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, mono)
            if e
        ]
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)


def sort_key(mono: Mono):
    """Expose the canonical monomial order used for printing."""
    return grlex_key(mono)
