"""Expression front-end for the CLI.

Grammar (ASCII surface syntax)::

    expr    := ['-'] term (('+'|'-') term)*
    term    := factor (('*'|'/')? factor)*        # juxtaposition multiplies
    factor  := primary ("'" | '^' ['-'] int)*
    primary := int | scalar-name | generator-name
             | 'j' digit '(' expr ')' | '(' expr ')'

Scalar names: ``q``, ``qb``, ``zeta``, ``i``.  Generator names depend on the
selected algebra (``a g`` / ``a g z`` / ``U V``); the postfix apostrophe is
the adjoint, on scalars the conjugate.  Division requires a scalar divisor;
negative powers require a scalar base.  ``j1`` / ``j2`` / ``j3`` wrap an
expression of the corresponding tensor factor.

Everything evaluates directly to an element of the selected presentation, so
scalar arithmetic and algebra words share one grammar.
"""

from __future__ import annotations

import re

from .braided import embed
from .errors import ParseError
from .scalars import Scalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(['^()*/+-]))")

_SCALARS = {
    "q": Scalar.q,
    "qb": Scalar.qbar,
    "zeta": Scalar.zeta,
    "i": Scalar.imag_unit,
}


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = len(text) - len(stripped) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", col)
        number, name, op = m.groups()
        col = m.start(m.lastindex) + 1
        if number is not None:
            tokens.append(("int", int(number), col))
        elif name is not None:
            tokens.append(("name", name, col))
        else:
            tokens.append(("op", op, col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, pres, tokens):
        self.pres = pres
        self.tokens = tokens
        self.i = 0
        self.open_parens = []

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, col = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", col)
        return self.advance()

    # -- grammar ------------------------------------------------------------

    def parse_expr(self, pres=None):
        pres = pres or self.pres
        kind, value, col = self.peek()
        negate = False
        if kind == "op" and value == "-":
            self.advance()
            negate = True
        out = self.parse_term(pres)
        if negate:
            out = -out
        while True:
            kind, value, col = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.parse_term(pres)
                out = out + rhs if value == "+" else out - rhs
            else:
                return out

    def parse_term(self, pres):
        out = self.parse_factor(pres)
        while True:
            kind, value, col = self.peek()
            if kind == "op" and value in "*/":
                self.advance()
                rhs = self.parse_factor(pres)
                if value == "*":
                    out = out * rhs
                else:
                    out = out * self._as_scalar(rhs, col).inverse()
            elif kind in ("int", "name") or (kind == "op" and value == "("):
                out = out * self.parse_factor(pres)
            else:
                return out

    def parse_factor(self, pres):
        out = self.parse_primary(pres)
        while True:
            kind, value, col = self.peek()
            if kind == "op" and value == "'":
                self.advance()
                out = out.adjoint()
            elif kind == "op" and value == "^":
                self.advance()
                kind2, value2, col2 = self.peek()
                sign = 1
                if kind2 == "op" and value2 == "-":
                    self.advance()
                    sign = -1
                    kind2, value2, col2 = self.peek()
                if kind2 != "int":
                    raise ParseError("expected an integer exponent", col2)
                self.advance()
                n = sign * value2
                if n >= 0:
                    out = out**n
                else:
                    out = out.pres.scalar(self._as_scalar(out, col) ** n)
            else:
                return out

    def parse_primary(self, pres):
        kind, value, col = self.advance()
        if kind == "int":
            return pres.scalar(Scalar.from_int(value))
        if kind == "op" and value == "(":
            self.open_parens.append(col)
            inner = self.parse_expr(pres)
            k2, v2, _ = self.peek()
            if not (k2 == "op" and v2 == ")"):
                raise ParseError("unclosed parenthesis", col)
            self.advance()
            self.open_parens.pop()
            return inner
        if kind == "name":
            if value in _SCALARS:
                return pres.scalar(_SCALARS[value]())
            m = re.fullmatch(r"j(\d)", value)
            if m:
                leg = int(m.group(1))
                if pres.factors is None:
                    raise ParseError(
                        f"leg embedding {value} needs a tensor-product algebra", col
                    )
                if not (1 <= leg <= len(pres.factors)):
                    raise ParseError(f"algebra has no leg {leg}", col)
                kind2, value2, col2 = self.peek()
                if not (kind2 == "op" and value2 == "("):
                    raise ParseError(f"expected '(' after {value}", col2)
                self.advance()
                self.open_parens.append(col2)
                inner = self.parse_expr(pres.factors[leg - 1])
                k3, v3, _ = self.peek()
                if not (k3 == "op" and v3 == ")"):
                    raise ParseError("unclosed parenthesis", col2)
                self.advance()
                self.open_parens.pop()
                return embed(pres, leg, inner)
            # generator name; a following apostrophe is handled as the
            # adjoint postfix, which on a generator is its starred partner
            try:
                idx = pres.gen_index(value)
            except KeyError:
                raise ParseError(
                    f"unknown generator {value!r} for algebra {pres.label!r}", col
                ) from None
            return pres.gen(idx)
        if kind == "end" and self.open_parens:
            raise ParseError("unclosed parenthesis", self.open_parens[-1])
        raise ParseError("unexpected end of expression" if kind == "end" else
                         f"unexpected token {value!r}", col)

    @staticmethod
    def _as_scalar(el, col):
        terms = el.terms()
        if not terms:
            return Scalar.zero()
        if len(terms) == 1 and terms[0][0] == ():
            return terms[0][1]
        raise ParseError("this operation needs a scalar operand", col)


def parse(text, pres):
    """Parse an expression into a normalized element of ``pres``."""
    parser = _Parser(pres, tokenize(text))
    out = parser.parse_expr()
    kind, value, col = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {value!r}", col)
    return out
