"""Parsing and canonical printing of algebra elements.

Grammar (whitespace insensitive)::

    expr     := term (("+" | "-") term)*
    term     := [rational "*"] gen | rational
    gen      := "L" "(" int ")" | "I" "(" int ")" | "CL" | "CI" | "CLI"
    rational := ["-"] digits ["/" digits]
    int      := ["-"] digits

A bare rational term denotes that multiple of the zero element, so "0" is the
zero element.  Canonical printing sorts terms by basis order, reduces every
coefficient, elides unit coefficients, and uses Lie labels (V_p prints as
L(p-1), W_q as I(q)); the zero element prints "0".  A leading negative term
keeps its sign inside the rational ("-1*L(2)"), which re-parses.

Every rejected input reports a 1-based column.
"""

from __future__ import annotations

from fractions import Fraction

from .core import BasisIndex, Element, Sector

__all__ = [
    "ParseError",
    "parse_element",
    "format_element",
    "format_rational",
    "format_tensor",
    "format_dual_element",
]

_CENTRAL_NAMES = ("CL", "CI", "CLI")


class ParseError(ValueError):
    """Syntax or value error in an element expression, with 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column


class _Token:
    __slots__ = ("kind", "text", "column")

    def __init__(self, kind: str, text: str, column: int):
        self.kind = kind
        self.text = text
        self.column = column


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    n = len(source)
    while pos < n:
        ch = source[pos]
        if ch.isspace():
            pos += 1
            continue
        col = pos + 1
        if ch.isdigit():
            start = pos
            while pos < n and source[pos].isdigit():
                pos += 1
            tokens.append(_Token("num", source[start:pos], col))
        elif ch.isalpha():
            start = pos
            while pos < n and source[pos].isalpha():
                pos += 1
            tokens.append(_Token("name", source[start:pos], col))
        elif ch in "+-*/()":
            tokens.append(_Token(ch, ch, col))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", col)
    # errors at end of input point at the last character, staying in range
    tokens.append(_Token("end", "", max(n, 1)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.column)
        return self.advance()

    def parse_expr(self) -> Element:
        acc: dict[BasisIndex, Fraction] = {}
        self.parse_term(acc, Fraction(1))
        while self.peek().kind in ("+", "-"):
            sign = Fraction(1) if self.advance().kind == "+" else Fraction(-1)
            self.parse_term(acc, sign)
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError("expected '+', '-', or end of input", tok.column)
        return Element(acc)

    def parse_term(self, acc: dict[BasisIndex, Fraction], sign: Fraction) -> None:
        tok = self.peek()
        if tok.kind == "name":
            basis = self.parse_gen()
            acc[basis] = acc.get(basis, Fraction(0)) + sign
            return
        coeff = self.parse_rational()
        if self.peek().kind == "*":
            self.advance()
            basis = self.parse_gen()
            acc[basis] = acc.get(basis, Fraction(0)) + sign * coeff
        # a bare rational is a multiple of the zero element: contributes nothing

    def parse_rational(self) -> Fraction:
        tok = self.peek()
        negative = False
        if tok.kind == "-":
            self.advance()
            negative = True
        num_tok = self.expect("num", "a number")
        numerator = int(num_tok.text)
        denominator = 1
        if self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("num", "a denominator")
            denominator = int(den_tok.text)
            if denominator == 0:
                raise ParseError("zero denominator in rational literal", den_tok.column)
        value = Fraction(numerator, denominator)
        return -value if negative else value

    def parse_int(self) -> int:
        tok = self.peek()
        negative = False
        if tok.kind == "-":
            self.advance()
            negative = True
        num_tok = self.expect("num", "an integer")
        value = int(num_tok.text)
        return -value if negative else value

    def parse_gen(self) -> BasisIndex:
        tok = self.expect("name", "a generator name")
        name = tok.text
        if name in _CENTRAL_NAMES:
            sector = {"CL": Sector.CL, "CI": Sector.CI, "CLI": Sector.CLI}[name]
            return BasisIndex(sector)
        if name in ("L", "I"):
            self.expect("(", "'('")
            index = self.parse_int()
            self.expect(")", "')'")
            return BasisIndex.v(index + 1) if name == "L" else BasisIndex.w(index)
        raise ParseError(f"unknown generator name {name!r}", tok.column)


def parse_element(text: str) -> Element:
    """Parse an element expression; raises ParseError with a 1-based column."""
    return _Parser(text).parse_expr()


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_linear(pairs: list[tuple[str, Fraction]]) -> str:
    """Render (label, coefficient) pairs as a signed sum; empty renders '0'."""
    if not pairs:
        return "0"
    out: list[str] = []
    for label, coeff in pairs:
        if not out:
            if coeff == 1:
                out.append(label)
            else:
                out.append(f"{format_rational(coeff)}*{label}")
            continue
        sep = " + " if coeff > 0 else " - "
        mag = abs(coeff)
        out.append(sep + (label if mag == 1 else f"{format_rational(mag)}*{label}"))
    return "".join(out)


def format_element(e: Element) -> str:
    """Canonical text form; parse_element(format_element(e)) == e."""
    return _format_linear([(b.label(), c) for b, c in e.sorted_terms()])


def format_tensor(t) -> str:
    """Canonical text for rank-2/3 tensors, factors joined without spaces."""
    pairs = [
        ("(x)".join(b.label() for b in key), coeff) for key, coeff in t.sorted_terms()
    ]
    return _format_linear(pairs)


def format_dual_element(f) -> str:
    """Canonical text for dual elements over the eps basis."""
    pairs = [
        (f"eps({'V' if idx.sector == 0 else 'W'},{idx.degree})", coeff)
        for idx, coeff in f.sorted_terms()
    ]
    return _format_linear(pairs)
