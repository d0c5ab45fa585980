"""Finite Puiseux polynomials in an infinitely large ``x``.

An element is a finite sum of ``c * x**e`` with rational exponents ``e``
(any sign) and real algebraic coefficients ``c``.  The order makes ``x``
larger than every rational, so the sign of an element is the sign of its
leading coefficient.  This ring contains Z, the lexicographically ordered
Z[X] and Shepherdson's model as subrings, and lies inside their common
real closure.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from . import limits
from .errors import ResourceCapError
from .poly import sgn


def _scalar(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Puiseux:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple] = (), *, _trusted: bool = False):
        if _trusted:
            t = tuple(terms)
        else:
            acc: dict[Fraction, object] = {}
            for e, c in terms:
                e = Fraction(e)
                acc[e] = acc.get(e, 0) + _scalar(c)
            t = tuple(sorted(((e, c) for e, c in acc.items() if c != 0), key=lambda ec: -ec[0]))
        object.__setattr__(self, "terms", t)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Puiseux is immutable")

    @classmethod
    def const(cls, c) -> "Puiseux":
        return cls([(0, c)])

    @classmethod
    def monomial(cls, c, e) -> "Puiseux":
        return cls([(e, c)])

    @classmethod
    def x(cls) -> "Puiseux":
        return cls([(1, 1)])

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> Fraction | None:
        """Leading exponent, ``None`` for zero."""
        return self.terms[0][0] if self.terms else None

    @property
    def lc(self):
        return self.terms[0][1] if self.terms else Fraction(0)

    def leading(self) -> "Puiseux":
        return Puiseux(self.terms[:1], _trusted=True)

    def coeff(self, e) -> object:
        e = Fraction(e)
        for ee, c in self.terms:
            if ee == e:
                return c
        return Fraction(0)

    def exponents(self) -> list[Fraction]:
        return [e for e, _ in self.terms]

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.coeff(0)

    def truncate(self, keep) -> "Puiseux":
        """Terms whose exponent satisfies ``keep(e)``."""
        return Puiseux([(e, c) for e, c in self.terms if keep(e)], _trusted=True)

    # -- ring operations ---------------------------------------------------
    @staticmethod
    def lift(v) -> "Puiseux":
        if isinstance(v, Puiseux):
            return v
        return Puiseux.const(v)

    def __add__(self, other):
        if not isinstance(other, Puiseux):
            if other == 0:
                return self
            other = Puiseux.const(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        return Puiseux(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Puiseux(((e, -c) for e, c in self.terms), _trusted=True)

    def __sub__(self, other):
        return self + (-Puiseux.lift(other))

    def __rsub__(self, other):
        return Puiseux.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Puiseux):
            c = _scalar(other)
            if c == 0:
                return Puiseux()
            return Puiseux(((e, a * c) for e, a in self.terms), _trusted=True)
        if not self.terms or not other.terms:
            return Puiseux()
        lim = limits.current()
        acc: dict[Fraction, object] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        out = Puiseux((e, c) for e, c in acc.items())
        out._check(lim)
        return out

    __rmul__ = __mul__

    def _check(self, lim) -> None:
        if len(self.terms) > lim.terms:
            raise ResourceCapError(f"Puiseux term count {len(self.terms)} exceeds cap {lim.terms}")
        for e, _ in self.terms:
            if e.denominator > lim.exponent_den:
                raise ResourceCapError(f"exponent denominator {e.denominator} exceeds cap {lim.exponent_den}")

    def __pow__(self, n: int):
        result, base = Puiseux.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def div_monomial(self, c, e) -> "Puiseux":
        """Exact division by the nonzero monomial ``c * x**e``."""
        e = Fraction(e)
        inv = 1 / _scalar(c)
        return Puiseux(((ee - e, a * inv) for ee, a in self.terms), _trusted=True)

    def __truediv__(self, other):
        if isinstance(other, Puiseux):
            if len(other.terms) != 1:
                raise ValueError("Puiseux division only by monomials")
            e, c = other.terms[0]
            return self.div_monomial(c, e)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self.div_monomial(other, 0)

    # -- order -------------------------------------------------------------
    def sign(self) -> int:
        return sgn(self.terms[0][1]) if self.terms else 0

    def compare(self, other) -> int:
        return (self - Puiseux.lift(other)).sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == ((Fraction(0), Fraction(other)),)
        if not isinstance(other, Puiseux):
            return NotImplemented
        if len(self.terms) != len(other.terms):
            return False
        return all(e1 == e2 and c1 == c2 for (e1, c1), (e2, c2) in zip(self.terms, other.terms))

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(tuple((e, c if isinstance(c, Fraction) else hash(c)) for e, c in self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # -- text ----------------------------------------------------------------
    def format(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            neg = sgn(c) < 0
            mag = -c if neg else c
            cs = _fmt_scalar(mag)
            if e == 0:
                body = cs
            else:
                mono = var if e == 1 else (f"{var}^{e}" if e.denominator == 1 else f"{var}^({e})")
                body = mono if cs == "1" else f"{cs}*{mono}"
            pieces.append(("-" if neg else "+", body))
        s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Puiseux({self.format()!r})"


def _fmt_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return str(c)
