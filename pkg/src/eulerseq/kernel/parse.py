"""Expression grammar shared by ring, relation and divisor inputs.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'

Division is only allowed by nonzero constants (this is how rational
coefficients are written).  Whitespace is insignificant.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from .field import FieldSpec
from .mpoly import MPoly
from .poly1 import Poly1

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, field, variables):
        self.text = text
        self.field = field
        self.vars = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.pos += 1
        return tok

    def parse(self) -> MPoly:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.text)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], self.text)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, where = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if any(any(e) for e in rhs.terms) or rhs.is_zero():
                    raise ParseError("division only by nonzero constants", where, self.text)
                c = next(iter(rhs.terms.values()))
                value = value.scale(self.field.inv(c))
        return value

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", tok[2], self.text)
            self.take()
            base = base ** tok[1]
        return base

    def atom(self):
        kind, value, where = self.peek()
        if kind == "int":
            self.take()
            return MPoly.constant(self.field, self.vars, value)
        if kind == "id":
            self.take()
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r}", where, self.text)
            return MPoly.var(self.field, self.vars, self.index[value])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {what}", where, self.text)


def parse_poly(text: str, field: FieldSpec, variables) -> MPoly:
    """Parse a polynomial expression in the given variables."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string expression, got {type(text).__name__}")
    return _Parser(text, field, variables).parse()


def parse_univariate(text: str, field: FieldSpec, var: str = "t") -> Poly1:
    p = parse_poly(text, field, (var,))
    deg = max((e[0] for e in p.terms), default=-1)
    coeffs = [field.zero] * (deg + 1)
    for e, c in p.terms.items():
        coeffs[e[0]] = c
    return Poly1(field, coeffs, var, _raw=True)
