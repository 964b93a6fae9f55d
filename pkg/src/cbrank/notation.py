"""Parser and printer for the ``w``-notation of ordinals.

Grammar (whitespace is ignored)::

    expr := sum
    sum  := prod ('+' prod)*
    prod := atom ('*' nat)?
    atom := 'w' ('^' atom)? | nat | '(' expr ')'

``ω`` is accepted as a synonym for ``w``.  The printer emits canonical
Cantor normal form, e.g. ``w^(w^2*3+1)*2 + w*4 + 7``.
"""
from __future__ import annotations

from .ordinal import ONE, Ordinal, add, format_ordinal, mul, nat, omega_pow

__all__ = ["ParseError", "parse_ordinal", "print_ordinal"]

_DIGITS = "0123456789"


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str):
        if self._peek() != ch:
            found = self._peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.text, self.pos)
        self.pos += 1

    def parse(self) -> Ordinal:
        value = self.expr()
        if self._peek():
            raise ParseError(f"unexpected {self._peek()!r}", self.text, self.pos)
        return value

    def expr(self) -> Ordinal:
        value = self.prod()
        while self._peek() == "+":
            self.pos += 1
            value = add(value, self.prod())
        return value

    def prod(self) -> Ordinal:
        value = self.atom()
        if self._peek() == "*":
            self.pos += 1
            value = mul(value, self.nat())
        return value

    def atom(self) -> Ordinal:
        ch = self._peek()
        if ch in ("w", "ω"):
            self.pos += 1
            if self._peek() == "^":
                self.pos += 1
                return omega_pow(self.atom())
            return omega_pow(ONE)
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self._expect(")")
            return value
        if ch and ch in _DIGITS:
            return self.nat()
        found = ch or "end of input"
        raise ParseError(f"expected an ordinal, found {found!r}", self.text, self.pos)

    def nat(self) -> Ordinal:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a natural number", self.text, start)
        return nat(int(self.text[start:self.pos]))


def parse_ordinal(text: str) -> Ordinal:
    return _Parser(text).parse()


def print_ordinal(a: Ordinal) -> str:
    return format_ordinal(a)
