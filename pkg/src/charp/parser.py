"""Recursive-descent parser for polynomial and rational-function text.

Grammar (whitespace insignificant, multiplication explicit):

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" integer)?
    atom   := integer | name | "(" expr ")"

Names are the variables (x, y, z for up to three variables, x1..xn beyond)
plus `u`, the extension-field generator, which parses as a constant
coefficient when the context has m > 1.
"""

from __future__ import annotations

from .errors import PolySyntaxError
from .ffield import FieldContext
from .poly import EXPONENT_LIMIT, MultiPoly, RationalFn, var_names


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self):
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("num", text[i:j], i))
                i = j
                continue
            if ch.isalpha():
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("name", text[i:j], i))
                i = j
                continue
            if ch in "+-*^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise PolySyntaxError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", "", len(text)))

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        if tok[0] != "end":
            self.index += 1
        return tok


class _Parser:
    def __init__(self, text: str, ctx: FieldContext, nvars: int):
        self.toks = _Tokenizer(text)
        self.ctx = ctx
        self.nvars = nvars
        self.names = {name: i for i, name in enumerate(var_names(nvars))}

    def parse(self) -> MultiPoly:
        result = self._expr()
        kind, _, pos = self.toks.peek()
        if kind != "end":
            raise PolySyntaxError("unexpected trailing input", pos)
        return result

    def _expr(self) -> MultiPoly:
        result = self._term()
        while True:
            kind, _, _ = self.toks.peek()
            if kind == "+":
                self.toks.advance()
                result = result + self._term()
            elif kind == "-":
                self.toks.advance()
                result = result - self._term()
            else:
                return result

    def _term(self) -> MultiPoly:
        result = self._unary()
        while self.toks.peek()[0] == "*":
            self.toks.advance()
            result = result * self._unary()
        return result

    def _unary(self) -> MultiPoly:
        if self.toks.peek()[0] == "-":
            self.toks.advance()
            return -self._unary()
        return self._power()

    def _power(self) -> MultiPoly:
        base = self._atom()
        if self.toks.peek()[0] == "^":
            self.toks.advance()
            kind, text, pos = self.toks.advance()
            if kind != "num":
                raise PolySyntaxError("exponent must be an integer", pos)
            k = int(text)
            if k > EXPONENT_LIMIT:
                raise PolySyntaxError("exponent exceeds 32-bit bound", pos)
            return base ** k
        return base

    def _atom(self) -> MultiPoly:
        kind, text, pos = self.toks.advance()
        if kind == "num":
            return MultiPoly.const(self.ctx, self.nvars, int(text))
        if kind == "name":
            if text == "u" and self.ctx.m > 1:
                return MultiPoly.const(self.ctx, self.nvars,
                                       self.ctx.generator())
            idx = self.names.get(text)
            if idx is None:
                raise PolySyntaxError(f"unknown variable {text!r}", pos)
            return MultiPoly.variable(self.ctx, self.nvars, idx)
        if kind == "(":
            inner = self._expr()
            kind, _, pos = self.toks.advance()
            if kind != ")":
                raise PolySyntaxError("expected ')'", pos)
            return inner
        raise PolySyntaxError("expected a number, variable, or '('", pos)


def parse_poly(text: str, ctx: FieldContext, nvars: int) -> MultiPoly:
    """Parse polynomial text into canonical sparse form."""
    return _Parser(text, ctx, nvars).parse()


def parse_rational(text: str, ctx: FieldContext, nvars: int) -> RationalFn:
    """Parse `num/den` (split at the single top-level '/'), or a bare polynomial."""
    depth = 0
    split = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split is not None:
                raise PolySyntaxError("more than one top-level '/'", i)
            split = i
    if split is None:
        return RationalFn.from_poly(parse_poly(text, ctx, nvars))
    num = parse_poly(text[:split], ctx, nvars)
    den = parse_poly(text[split + 1:], ctx, nvars)
    if den.is_zero:
        raise PolySyntaxError("zero denominator", split + 1)
    return RationalFn(num, den)
