"""Recursive-descent parser for Lie expressions.

Grammar (whitespace-insensitive)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := rational '*' atom | rational | atom
    atom     := IDENT | '[' expr ',' expr ']' | '(' expr ')'
    rational := digits ['/' digits]

A bare rational is only legal when it is 0, so that the canonical
rendering of the zero element round-trips.  Errors carry a 0-based
character position.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LieSyntaxError, UnknownGeneratorError
from .lie import LieElement, bracket
from .words import GradedAlphabet

_SYMBOLS = "+-*/[](),"


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind      # 'ident' | 'number' | one of _SYMBOLS | 'end'
        self.text = text
        self.pos = pos

    def __repr__(self):
        return f"_Token({self.kind!r}, {self.text!r}, {self.pos})"


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("number", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
        else:
            raise LieSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: GradedAlphabet):
        self.tokens = _tokenize(text)
        self.alphabet = alphabet
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> _Token:
        tok = self.tokens[self.i]
        if kind is not None and tok.kind != kind:
            shown = tok.text or "end of input"
            raise LieSyntaxError(f"expected {kind!r}, found {shown!r}", tok.pos)
        self.i += 1
        return tok

    # rational := digits ['/' digits]
    def rational(self) -> Fraction:
        num = self.take("number")
        if self.peek().kind == "/":
            self.take("/")
            den_tok = self.take("number")
            den = int(den_tok.text)
            if den == 0:
                raise LieSyntaxError("zero denominator", den_tok.pos)
            return Fraction(int(num.text), den)
        return Fraction(int(num.text))

    def atom(self) -> LieElement:
        tok = self.peek()
        if tok.kind == "ident":
            self.take()
            try:
                idx = self.alphabet.index(tok.text)
            except KeyError:
                raise UnknownGeneratorError(tok.text, tok.pos) from None
            return LieElement(self.alphabet, {(idx,): Fraction(1)})
        if tok.kind == "[":
            self.take()
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return bracket(left, right)
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        shown = tok.text or "end of input"
        raise LieSyntaxError(
            f"expected a generator, '[' or '(', found {shown!r}", tok.pos)

    def term(self) -> LieElement:
        if self.peek().kind == "number":
            start = self.peek().pos
            coeff = self.rational()
            if self.peek().kind == "*":
                self.take("*")
                return self.atom().scale(coeff)
            if coeff == 0:
                return LieElement.zero(self.alphabet)
            raise LieSyntaxError(
                "a nonzero number must multiply a generator or bracket",
                start)
        return self.atom()

    def expr(self) -> LieElement:
        sign = 1
        if self.peek().kind == "-":
            self.take()
            sign = -1
        acc = self.term().scale(sign)
        while self.peek().kind in "+-":
            op = self.take()
            nxt = self.term()
            acc = acc + nxt if op.kind == "+" else acc - nxt
        return acc


def parse_lie(text: str, alphabet: GradedAlphabet) -> LieElement:
    """Parse ``text`` into a :class:`LieElement` over ``alphabet``.

    Inverse of the canonical printer on its image; accepts arbitrary
    whitespace, nested brackets, parenthesized sums, and rational
    coefficients such as ``3/2*[x,y] - y``.
    """
    parser = _Parser(text, alphabet)
    result = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise LieSyntaxError(f"unexpected trailing {trailing.text!r}",
                             trailing.pos)
    return result
