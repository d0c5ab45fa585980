"""Roots of polynomials over the Puiseux ring, identified by index.

Bisection cannot shrink intervals in a non-archimedean field, so a root is
named by ``(defining polynomial, ascending index)`` and located by Sturm
sign counting at fraction points, which is valid over any real closed
field.  Chains are built from sign-preserving pseudo-remainders so every
computation stays inside the coefficient ring.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError
from .fraction_field import Frac
from .poly import Poly, poly_gcd, sgn
from .puiseux import Puiseux


def _lift_poly(p: Poly) -> Poly:
    return Poly(Puiseux.lift(c) for c in p.coeffs)


def normalize(p: Poly) -> Poly:
    """Positive rescaling that keeps coefficients small.

    Divides by ``|a| * x**e`` where ``a * x**e`` leads the leading
    coefficient; ``a`` is only used when rational.
    """
    if p.is_zero():
        return p
    e, a = p.lc.terms[0]
    scale = abs(a) if isinstance(a, Fraction) else Fraction(1)
    if e == 0 and scale == 1:
        return p
    return Poly(c.div_monomial(scale, e) for c in p.coeffs)


def _u_poly(c: Puiseux, n: int, emin: Fraction) -> Poly:
    if not c:
        return Poly()
    cs = [Fraction(0)] * (int((c.degree - emin) * n) + 1)
    for e, a in c.terms:
        cs[int((e - emin) * n)] = a
    return Poly(cs)


def primitive(p: Poly) -> Poly:
    """Divide out the gcd of the coefficients, a positive ring element.

    Coefficients become polynomials in ``u = x**(1/n)``; their monic gcd
    is positive since ``x`` is infinite, so root order and signs survive.
    """
    cs = [c for c in p.coeffs if c]
    if len(cs) < 2 or all(len(c.terms) == 1 for c in cs):
        return normalize(p)
    n = math.lcm(*(e.denominator for c in cs for e, _ in c.terms))
    emin = min(c.terms[-1][0] for c in cs)
    us = [_u_poly(c, n, emin) for c in p.coeffs]
    g = Poly()
    for u in us:
        if u:
            g = poly_gcd(g, u) if g else u.monic()
            if g.degree == 0:
                return normalize(p)
    k = next(i for i, a in enumerate(g.coeffs) if a != 0)
    g = Poly(g.coeffs[k:])
    if g.degree == 0:
        return normalize(p)
    out = []
    for u in us:
        q = u // g if u else u
        out.append(Puiseux(((emin + Fraction(i, n), a) for i, a in enumerate(q.coeffs) if a != 0),
                           _trusted=False))
    return normalize(Poly(out))


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """``lc(b)**(2k) * a = q*b + r`` with ``deg r < deg b``."""
    q, r = Poly(), a
    m = b.degree
    lc = b.lc
    while r and r.degree >= m:
        k = r.degree - m
        mono = Poly.monomial(r.lc, k)
        q = q * lc + mono
        r = r * lc - mono * b
        q, r = q * lc, r * lc
    return q, r


def pseudo_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, primitive(pdivmod(a, b)[1])
    return primitive(a)


def squarefree(p: Poly) -> Poly:
    """Square-free part with a positive leading coefficient."""
    p = primitive(_lift_poly(p))
    if p and p.lc.sign() < 0:
        p = -p
    if p.degree <= 0:
        return p
    g = pseudo_gcd(p, p.deriv())
    if g.degree <= 0:
        return p
    q, r = pdivmod(p, g)
    assert r.is_zero()
    return primitive(q)


@lru_cache(maxsize=2048)
def sturm_chain_ring(p: Poly) -> tuple[Poly, ...]:
    chain = [p, primitive(p.deriv())]
    while chain[-1]:
        chain.append(primitive(-pdivmod(chain[-2], chain[-1])[1]))
    chain.pop()
    return tuple(chain)


def sign_at(p: Poly, f) -> int:
    """Sign of ``p(f)`` for a fraction or ring point ``f``."""
    if isinstance(f, Frac):
        if f.den == 1:
            return sgn(p(f.num))
        return sgn(p.eval_homogeneous(f.num, f.den))
    return sgn(p(Puiseux.lift(f)))


def _variations(signs) -> int:
    last, n = 0, 0
    for s in signs:
        if s:
            if last and s != last:
                n += 1
            last = s
    return n


class Counter:
    """Sturm root counting for one square-free polynomial."""

    def __init__(self, p: Poly):
        self.p = p
        self.chain = sturm_chain_ring(p)
        self.v_minus = _variations(
            (sgn(q.lc) if q.degree % 2 == 0 else -sgn(q.lc)) for q in self.chain)
        self.v_plus = _variations(sgn(q.lc) for q in self.chain)

    @property
    def total(self) -> int:
        return self.v_minus - self.v_plus

    def variations(self, f) -> int:
        return _variations(sign_at(q, f) for q in self.chain)

    def n_le(self, f) -> int:
        """Number of roots ``<= f``."""
        return self.v_minus - self.variations(f)

    def count_open(self, a, b) -> int:
        """Number of roots in the open interval ``(a, b)``."""
        n = self.variations(a) - self.variations(b)
        if sign_at(self.p, b) == 0:
            n -= 1
        return n


@lru_cache(maxsize=2048)
def counter_for(p: Poly) -> Counter:
    return Counter(p)


@dataclass(frozen=True)
class RootElem:
    """The ``index``-th real root (1-based, ascending) of ``defining``."""

    defining: Poly
    index: int

    @property
    def counter(self) -> Counter:
        return counter_for(self.defining)

    def shifted(self, s) -> "RootElem":
        """The root ``self + s`` for a ring or fraction value ``s``."""
        f = Frac.lift(s)
        # p(t - s) cleared of the denominator of s keeps the same root order
        p = self.defining
        if f.den == 1:
            q = p.shift(-f.num)
        else:
            n = p.degree
            # den**n * p((den*t - num)/den)
            lin = Poly([-f.num, f.den])
            q = Poly()
            for i, c in enumerate(p.coeffs):
                q = q + (lin**i) * (c * f.den ** (n - i))
        return RootElem(primitive(q), self.index)

    def negated(self) -> "RootElem":
        return RootElem(primitive(self.defining.mirror()), self.counter.total - self.index + 1)

    def __str__(self):
        return f"rcroot({self.defining.to_str('t', lambda c: str(c))}, {self.index})"


def root_elem(p: Poly, index: int) -> RootElem:
    if p.is_zero():
        raise PreconditionError("zero polynomial")
    q = squarefree(p)
    n = counter_for(q).total if q.degree > 0 else 0
    if not 1 <= index <= n:
        if n == 0:
            raise PreconditionError("0 real roots")
        raise PreconditionError(f"polynomial has {n} real roots, index {index} out of range")
    return RootElem(q, index)


def roots_of(p: Poly) -> list[RootElem]:
    q = squarefree(p)
    if q.degree <= 0:
        return []
    return [RootElem(q, k) for k in range(1, counter_for(q).total + 1)]


def exact(v) -> RootElem:
    """An exact ring or fraction value presented as a root."""
    f = Frac.lift(v)
    return RootElem(primitive(Poly([-f.num, f.den])), 1)


def cmp_root_frac(r: RootElem, f) -> int:
    """-1, 0, 1 as the root is below, at, or above the fraction ``f``."""
    c = r.counter
    n = c.n_le(f)
    if n >= r.index:
        if n == r.index and sign_at(r.defining, f) == 0:
            return 0
        return -1
    return 1
