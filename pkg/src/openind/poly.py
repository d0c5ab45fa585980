"""Dense univariate polynomials over an arbitrary coefficient domain.

Coefficients only need ``+ - *`` and comparison with ``0``; field
operations (``divmod``, ``gcd``) additionally need ``/``.  The same class
serves rational, real-algebraic and Puiseux coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence


def fdiv(a, b):
    """Exact division; integer operands produce a Fraction."""
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def sgn(v) -> int:
    """Sign of a scalar: ints, Fractions, or anything with ``.sign()``."""
    if isinstance(v, (int, Fraction)):
        return (v > 0) - (v < 0)
    return v.sign()


class Poly:
    """Immutable polynomial, coefficients in ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, c, n: int) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    # -- structure ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ---------------------------------------------
    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other):
        return Poly(other * c for c in self.coeffs)

    def __pow__(self, n: int):
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map(self, f) -> "Poly":
        return Poly(f(c) for c in self.coeffs)

    # -- evaluation / substitution -------------------------------------
    def __call__(self, v):
        if not self.coeffs:
            return 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * v + c
        return acc

    def eval_homogeneous(self, num, den, degree: int | None = None):
        """Return ``den**n * p(num/den)`` with ``n = degree or deg p``.

        Keeps the computation inside the coefficient ring; for ``den > 0``
        the sign equals the sign of ``p(num/den)``.
        """
        n = self.degree if degree is None else degree
        if not self.coeffs:
            return 0
        total = 0
        npow = [1]
        for _ in range(len(self.coeffs) - 1):
            npow.append(npow[-1] * num)
        dpow = 1
        for i in range(n, -1, -1):
            if i < len(self.coeffs) and self.coeffs[i] != 0:
                total = total + self.coeffs[i] * npow[i] * dpow
            if i > 0:
                dpow = dpow * den
        return total

    def compose(self, q: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, s) -> "Poly":
        """``p(t + s)``."""
        return self.compose(Poly([s, 1]))

    def mirror(self) -> "Poly":
        """``p(-t)``."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def reverse(self) -> "Poly":
        """``t**deg * p(1/t)``."""
        return Poly(reversed(self.coeffs))

    def deriv(self) -> "Poly":
        return Poly(c * i for i, c in enumerate(self.coeffs) if i > 0)

    # -- field division ------------------------------------------------
    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        q = [0] * (dq + 1)
        lc = other.lc
        for k in range(dq, -1, -1):
            c = r[k + len(other.coeffs) - 1]
            if c == 0:
                continue
            c = fdiv(c, lc)
            q[k] = c
            for j, b in enumerate(other.coeffs):
                r[k + j] = r[k + j] - c * b
            r[k + len(other.coeffs) - 1] = 0
        return Poly(q), Poly(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        lc = self.lc
        return Poly(fdiv(c, lc) for c in self.coeffs)

    # -- ring pseudo-division ------------------------------------------
    def prem(self, other: "Poly") -> "Poly":
        """Pseudo-remainder scaled by ``lc(other)**2k`` so its sign is kept.

        Using an even power of the leading coefficient makes the result a
        positive multiple of the true remainder, which Sturm chains need.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = self
        m = len(other.coeffs) - 1
        lc = other.lc
        while r and r.degree >= m:
            k = r.degree - m
            lr = r.lc
            r = r * lc - Poly.monomial(lr, k) * other
            r = r * lc
        return r

    def to_str(self, var: str = "t", fmt=str) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            s = fmt(c)
            neg = s.startswith("-") and not s.startswith("-(")
            if neg:
                s = s[1:]
            if i > 0 and s == "1":
                s = ""
            elif i > 0 and any(ch in s for ch in "+- ") and not s.startswith("("):
                s = f"({s})"
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            body = s + ("*" if s and mono else "") + mono
            parts.append(("-" if neg else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over a field."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def squarefree_part(p: Poly) -> Poly:
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.deriv())
    return p if g.degree <= 0 else p // g


def as_fraction_poly(coeffs: Sequence) -> Poly:
    return Poly(Fraction(c) for c in coeffs)


def integer_primitive(p: Poly) -> Poly:
    """Scale a rational polynomial to coprime integers with positive lc."""
    if p.is_zero():
        return p
    from math import gcd, lcm

    den = 1
    for c in p.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return Poly(c // g for c in ints)
