"""Parser for the shared expression syntax of elements, fractions and polynomials.

One grammar covers every textual input::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' (nat | '(' ['-'] rat ')')]
    atom   := number | 'x' | 'X' | 't' | root(expr, nat) | '(' expr ')'

Values are polynomials in ``t`` whose coefficients are fractions over the
Puiseux ring; callers narrow them to what they expect (a ring element, a
fraction, a polynomial over Q).  Rational exponents are only allowed on
``x`` itself.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .fraction_field import Frac
from .poly import Poly
from .puiseux import Puiseux

_TOKEN = re.compile(r"\s*(?:(\d+)|(root|rcroot|[xXt])|(<=|[-+*/^(),]))")


@dataclass(frozen=True)
class Tok:
    kind: str  # num, name, op, end
    text: str
    pos: int
    index: int


def tokenize(text: str) -> list[Tok]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, len(out) + 1)
        kind = "num" if m.group(1) else "name" if m.group(2) else "op"
        start = m.start(m.lastindex)
        out.append(Tok(kind, m.group(m.lastindex), start, len(out) + 1))
        pos = m.end()
    out.append(Tok("end", "", len(text), len(out) + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def fail(self, msg: str, tok: Tok | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.pos, tok.index)

    def eat(self, text: str) -> Tok:
        if self.tok.text != text:
            self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        t = self.tok
        self.i += 1
        return t

    def done(self):
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}")

    def expr(self) -> Poly:
        sign = 1
        if self.tok.text in "+-" and self.tok.kind == "op":
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
        acc = self.term() * Frac(sign)
        while self.tok.kind == "op" and self.tok.text in ("+", "-"):
            op = self.tok.text
            self.i += 1
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.tok.kind == "op" and self.tok.text in ("*", "/"):
            op_tok = self.tok
            self.i += 1
            rhs = self.factor()
            if op_tok.text == "*":
                acc = acc * rhs
            else:
                if rhs.degree != 0:
                    self.fail("can only divide by a nonzero t-free value", op_tok)
                acc = acc * Frac.lift(rhs.coeffs[0]).inverse()
        return acc

    def factor(self) -> Poly:
        start = self.tok
        base = self.atom()
        if self.tok.text != "^":
            return base
        self.i += 1
        if self.tok.kind == "num":
            n = int(self.eat(self.tok.text).text)
            if start.text == "x" or start.text == "X":
                return _const(Puiseux.monomial(1, n))
            return base**n
        if self.tok.text == "(":
            if start.text not in ("x", "X"):
                self.fail("rational exponents are only allowed on x")
            self.i += 1
            neg = False
            if self.tok.text == "-":
                neg = True
                self.i += 1
            num = self._nat()
            den = 1
            if self.tok.text == "/":
                self.i += 1
                den = self._nat()
                if den == 0:
                    self.fail("zero exponent denominator")
            self.eat(")")
            e = Fraction(num, den) * (-1 if neg else 1)
            return _const(Puiseux.monomial(1, e))
        self.fail("expected exponent")

    def _nat(self) -> int:
        if self.tok.kind != "num":
            self.fail("expected a natural number")
        return int(self.eat(self.tok.text).text)

    def atom(self) -> Poly:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return _const(Puiseux.const(int(tok.text)))
        if tok.kind == "name":
            self.i += 1
            if tok.text in ("x", "X"):
                return _const(Puiseux.x())
            if tok.text == "t":
                return Poly([Frac(0), Frac(1)])
            if tok.text == "root":
                self.eat("(")
                inner = self.expr()
                self.eat(",")
                k_tok = self.tok
                k = self._nat()
                self.eat(")")
                try:
                    p = to_rational_poly(inner)
                except ValueError as exc:
                    self.fail(str(exc), tok)
                from .realalg import RealAlg

                try:
                    v = RealAlg.root(p, k)
                except ValueError as exc:
                    self.fail(str(exc), k_tok)
                return _const(Puiseux.const(v))
            self.fail(f"{tok.text!r} is not allowed here")
        if tok.text == "(":
            self.i += 1
            v = self.expr()
            self.eat(")")
            return v
        self.fail(f"unexpected {tok.text or 'end of input'!r}")


def _const(p: Puiseux) -> Poly:
    return Poly([Frac(p)])


def parse_expr(text: str) -> Poly:
    """Parse ``text`` into a polynomial in t with fraction coefficients."""
    p = _Parser(text)
    v = p.expr()
    p.done()
    return v


def to_rational_poly(v: Poly) -> Poly:
    out = []
    for c in v.coeffs:
        f = Frac.lift(c)
        if not (f.num.is_constant() and f.den.is_constant()):
            raise ValueError("coefficients must be rational constants")
        n, d = f.num.constant_value(), f.den.constant_value()
        if not isinstance(n, Fraction) or not isinstance(d, Fraction):
            raise ValueError("coefficients must be rational constants")
        out.append(n / d)
    return Poly(out)


def parse_frac(text: str) -> Frac:
    v = parse_expr(text)
    if v.degree > 0:
        raise ParseError("unexpected variable t", 0)
    return v.coeffs[0] if v.coeffs else Frac(0)


def parse_puiseux(text: str) -> Puiseux:
    f = parse_frac(text)
    if f.den != 1:
        raise ParseError("expected a ring element, got a proper fraction", 0)
    return f.num


def parse_poly_over(text: str) -> Poly:
    """Polynomial in t over fractions, with denominators cleared.

    Returns a polynomial whose coefficients are Puiseux elements; the
    result is a positive multiple of the input, so its roots are unchanged.
    """
    return clear_denominators(parse_expr(text))


def clear_denominators(v: Poly) -> Poly:
    den = Puiseux.const(1)
    for c in v.coeffs:
        f = Frac.lift(c)
        if f.den != 1:
            den = den * f.den
    out = []
    for c in v.coeffs:
        f = Frac.lift(c)
        # f.num * den / f.den is exact: f.den is a factor of den
        out.append(_exact_quotient(f.num * den, f.den))
    return Poly(out)


def _exact_quotient(a: Puiseux, b: Puiseux) -> Puiseux:
    if b == 1:
        return a
    q, r = puiseux_divmod(a, b)
    if not r.is_zero():
        raise ValueError("inexact Puiseux division")
    return q


def puiseux_divmod(a: Puiseux, b: Puiseux, stop=None):
    """Long division by leading terms, until the remainder is zero or
    ``stop(exponent)`` is true for the next quotient exponent."""
    q = Puiseux()
    r = a
    e_b, c_b = b.terms[0]
    guard = 0
    while not r.is_zero():
        e = r.degree - e_b
        if stop is not None and stop(e):
            break
        c = r.lc / c_b
        mono = Puiseux.monomial(c, e)
        q = q + mono
        r = r - mono * b
        guard += 1
        if guard > 10_000:
            raise ValueError("division does not terminate")
    return q, r
