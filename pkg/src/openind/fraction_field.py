"""Fractions over a model, Euclidean division and integer parts.

``Frac`` holds a numerator and a positive denominator from the ambient
Puiseux ring.  Fractions are not gcd-reduced; equality and order go
through cross-multiplication.  A monomial denominator is divided out
eagerly, which keeps most values in the form ``p / 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .puiseux import Puiseux


class Frac:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = Puiseux.lift(num), Puiseux.lift(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if den.sign() < 0:
            num, den = -num, -den
        if len(den.terms) == 1:
            e, c = den.terms[0]
            num, den = num.div_monomial(c, e), Puiseux.const(1)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Frac is immutable")

    @staticmethod
    def lift(v) -> "Frac":
        return v if isinstance(v, Frac) else Frac(v)

    def is_integral_form(self) -> bool:
        return self.den == 1

    def __add__(self, other):
        o = Frac.lift(other)
        if self.den == o.den:
            return Frac(self.num + o.num, self.den)
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-Frac.lift(other))

    def __rsub__(self, other):
        return Frac.lift(other) - self

    def __mul__(self, other):
        o = Frac.lift(other)
        return Frac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Frac":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        return Frac(self.den, self.num)

    def __truediv__(self, other):
        return self * Frac.lift(other).inverse()

    def __rtruediv__(self, other):
        return Frac.lift(other) * self.inverse()

    def sign(self) -> int:
        return self.num.sign()

    def compare(self, other) -> int:
        o = Frac.lift(other)
        return (self.num * o.den - o.num * self.den).sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Puiseux, Frac)):
            return self.compare(other) == 0
        return NotImplemented

    __hash__ = None

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __bool__(self):
        return not self.num.is_zero()

    def format(self, var: str = "x") -> str:
        n = self.num.format(var)
        if self.den == 1:
            return n
        return f"({n}) / ({self.den.format(var)})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Frac({self.format()!r})"


# -- Euclidean division and integer parts -------------------------------------

@dataclass(frozen=True)
class DivResult:
    quotient: Puiseux
    remainder: Puiseux


def floor_quotient(n: Puiseux, k: Puiseux) -> Puiseux:
    """The unique ``q`` in D with ``q*k <= n < (q+1)*k`` for ``k > 0``.

    D is the ring of Puiseux polynomials with nonnegative exponents and an
    integer constant term; it contains every model.
    """
    from .text import puiseux_divmod

    q, rem = puiseux_divmod(n, k, stop=lambda e: e < 0)
    # rem/k is infinitesimal, so only the constant term of q needs rounding
    c0 = q.coeff(0)
    pos = Puiseux([(e, c) for e, c in q.terms if e > 0])
    if isinstance(c0, (int, Fraction)) and Fraction(c0).denominator == 1:
        out = pos + int(c0)
        if rem.sign() < 0:
            out = out - 1
    else:
        out = pos + math.floor(c0)
    return out


def _divide(model, n: Puiseux, k: Puiseux, what: str):
    from .results import NotFound

    if k.sign() <= 0:
        raise PreconditionError("divisor must be positive")
    q = floor_quotient(n, k)
    l = n - q * k
    if not (l.sign() >= 0 and (k - l).sign() > 0):
        raise AssertionError("division certification failed")
    if model.contains(q):
        return DivResult(q, l)
    return NotFound(
        f"the {what} in the Shepherdson ring is {q.format(model.var)}, which is not in "
        f"{model.id.name} ({model.violation(q)}); {what}s are unique in any discretely "
        f"ordered ring containing both, so none exists in {model.id.name}")


def euclid_div(model, n: Puiseux, k: Puiseux):
    """``n = q*k + l`` with ``0 <= l < k`` in the model, or NotFound."""
    model.check(n, k)
    return _divide(model, n, k, "quotient")


def frac_integer_part(model, f: Frac):
    """``m`` in the model with ``m <= f < m + 1``, or NotFound."""
    out = _divide(model, f.num, f.den, "integer part")
    return out.quotient if isinstance(out, DivResult) else out


def nat_den_integer_part(model, m: Puiseux, n: int):
    """Integer part of ``m / n`` for a positive integer ``n``."""
    if n <= 0:
        raise PreconditionError("denominator must be a positive integer")
    model.check(m)
    return frac_integer_part(model, Frac(m, n))
