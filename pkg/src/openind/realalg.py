"""Exact real root counting and real algebraic numbers over Q.

Sturm chains, counting and isolation work for any archimedean coefficient
field whose elements can be compared with rationals (``Fraction`` and
``RealAlg``).  ``RealAlg`` values are always irrational; rational results
are returned as ``Fraction`` so that zero tests stay trivial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from . import limits
from .errors import ResourceCapError
from .poly import Poly, integer_primitive, sgn, squarefree_part


@dataclass(frozen=True)
class Interval:
    lo: Any
    hi: Any
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self):
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError("interval with lo > hi")
            if self.lo == self.hi and (self.lo_open or self.hi_open):
                raise ValueError("degenerate interval must be closed")

    def __str__(self):
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo}, {self.hi}{right}"


# ---------------------------------------------------------------------------
# Sturm chains


def sturm_chain(p: Poly) -> list[Poly]:
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm chain")
    chain = [p, p.deriv()]
    while chain[-1]:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(signs) -> int:
    last, count = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def variations_at(chain: list[Poly], point) -> int:
    return _variations(sgn(q(point)) for q in chain)


def variations_at_infinity(chain: list[Poly], positive: bool) -> int:
    signs = []
    for q in chain:
        s = sgn(q.lc)
        if not positive and q.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def cauchy_bound(p: Poly) -> Fraction:
    lc = p.lc
    best = Fraction(0)
    for c in p.coeffs[:-1]:
        if c == 0:
            continue
        q = abs(Fraction(c) / Fraction(lc)) if _is_rat(c) and _is_rat(lc) else _abs_upper(c / lc)
        best = max(best, q)
    return 1 + best


def _is_rat(v) -> bool:
    return isinstance(v, (int, Fraction))


def _abs_upper(v) -> Fraction:
    if _is_rat(v):
        return abs(Fraction(v))
    lo, hi = v.interval()
    return max(abs(lo), abs(hi))


def count_real_roots(p: Poly, iv: Interval | None = None) -> int:
    """Distinct real roots of ``p`` in ``iv`` (whole line when ``None``)."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    lo = None if iv is None else iv.lo
    hi = None if iv is None else iv.hi
    v_lo = variations_at_infinity(chain, False) if lo is None else variations_at(chain, lo)
    v_hi = variations_at_infinity(chain, True) if hi is None else variations_at(chain, hi)
    n = v_lo - v_hi  # roots in (lo, hi]
    if iv is not None:
        if lo is not None and not iv.lo_open and q(lo) == 0:
            n += 1
        if hi is not None and iv.hi_open and q(hi) == 0:
            n -= 1
    return n


def isolate_real_roots(p: Poly) -> list[Interval]:
    """Disjoint ascending intervals, one per distinct real root of ``p``."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    q = squarefree_part(p)
    if q.degree <= 0:
        return []
    chain = sturm_chain(q)
    b = cauchy_bound(q)

    def count(lo, hi):  # roots in (lo, hi]
        return variations_at(chain, lo) - variations_at(chain, hi)

    cap = limits.current().bisection
    out: list[Interval] = []
    stack = [(-b, b, count(-b, b))]
    steps = 0
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            if q(hi) == 0:
                out.append(Interval(hi, hi, False, False))
            else:
                out.append(Interval(lo, hi))
            continue
        steps += 1
        if steps > cap:
            raise ResourceCapError("root isolation exceeded bisection cap")
        mid = (lo + hi) / 2
        left = count(lo, mid)
        stack.append((mid, hi, n - left))
        stack.append((lo, mid, left))
    out.sort(key=lambda iv: iv.lo)
    return out


def simplest_between(a: Fraction, b: Fraction | None) -> Fraction:
    """Simplest rational strictly between ``a`` and ``b`` (``None`` = +inf)."""
    if b is not None and a >= b:
        raise ValueError("empty interval")
    if a < 0 and (b is None or b > 0):
        return Fraction(0)
    if b is not None and b <= 0:
        return -simplest_between(-b, -a)
    fl = math.floor(a)
    if b is None or fl + 1 < b:
        return Fraction(fl + 1)
    # no integer strictly inside: a in [fl, fl+1), b <= fl + 1
    lo = 1 / (b - fl)
    hi = None if a == fl else 1 / (a - fl)
    return fl + 1 / simplest_between(lo, hi)


# ---------------------------------------------------------------------------
# Resultants by evaluation and interpolation


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: list[int], g: list[int]) -> int:
    """Sylvester resultant of two integer polynomials (ascending lists)."""
    while f and f[-1] == 0:
        f = f[:-1]
    while g and g[-1] == 0:
        g = g[:-1]
    if not f or not g:
        return 0
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows)


def _interpolate(xs: list[int], ys: list[int]) -> Poly:
    # Newton divided differences, then expand
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * Poly([-xs[i], 1]) + coef[i]
    return p


def _expand_shift_neg(q: tuple[int, ...], t0: int) -> list[int]:
    """Coefficients in y of ``q(t0 - y)``."""
    return [int(c) for c in Poly(q).compose(Poly([t0, -1])).coeffs] or [0]


def _expand_scaled(q: tuple[int, ...], t0: int) -> list[int]:
    """Coefficients in y of ``y**m * q(t0 / y)``."""
    m = len(q) - 1
    out = [0] * (m + 1)
    for i, c in enumerate(q):
        out[m - i] = c * t0**i
    return out


@lru_cache(maxsize=4096)
def sum_polynomial(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Integer polynomial vanishing at every ``a + b``, p(a) = q(b) = 0."""
    deg = (len(p) - 1) * (len(q) - 1)
    xs = list(range(deg + 1))
    ys = [resultant(list(p), _expand_shift_neg(q, t0)) for t0 in xs]
    return tuple(integer_primitive(_interpolate(xs, ys)).coeffs)


@lru_cache(maxsize=4096)
def product_polynomial(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Integer polynomial vanishing at every ``a * b``, p(a) = q(b) = 0."""
    deg = (len(p) - 1) * (len(q) - 1)
    xs = list(range(deg + 1))
    ys = [resultant(list(p), _expand_scaled(q, t0)) for t0 in xs]
    return tuple(integer_primitive(_interpolate(xs, ys)).coeffs)


# ---------------------------------------------------------------------------
# Real algebraic numbers


def _int_poly(p: Poly) -> tuple[int, ...]:
    return tuple(integer_primitive(squarefree_part(p)).coeffs)


def _rat_eval(p: tuple[int, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _count_open(chain, p: tuple[int, ...], lo: Fraction, hi: Fraction) -> int:
    n = variations_at(chain, lo) - variations_at(chain, hi)
    if _rat_eval(p, hi) == 0:
        n -= 1
    return n


@lru_cache(maxsize=4096)
def _chain_for(p: tuple[int, ...]) -> tuple[Poly, ...]:
    return tuple(sturm_chain(Poly(Fraction(c) for c in p)))


class RealAlg:
    """An irrational real algebraic number.

    ``poly`` is the minimal polynomial (integer, primitive, positive
    leading coefficient); ``(lo, hi)`` is an open rational interval with
    non-root endpoints containing exactly one root.  The interval is
    refined in place by monotone narrowing only, which never changes the
    denoted value.

    Values built from one generator by field operations keep coordinates
    in ``Q(gen)`` and only compute their own minimal polynomial on demand.
    """

    __slots__ = ("_p", "_l", "_h", "gen", "coords")

    def __init__(self, poly: tuple[int, ...], lo: Fraction, hi: Fraction):
        self._p = tuple(poly)
        self._l = Fraction(lo)
        self._h = Fraction(hi)
        self.gen = None
        self.coords = None

    @classmethod
    def _in_field(cls, gen: "RealAlg", coords: tuple[Fraction, ...]):
        v = cls.__new__(cls)
        v._p = v._l = v._h = None
        v.gen = gen
        v.coords = coords
        return v

    # -- lazily materialized representation ---------------------------------
    @property
    def poly(self) -> tuple[int, ...]:
        if self._p is None:
            self._materialize()
        return self._p

    @property
    def _lo(self) -> Fraction:
        if self._p is None:
            self._materialize()
        return self._l

    @_lo.setter
    def _lo(self, v):
        self._l = v

    @property
    def _hi(self) -> Fraction:
        if self._p is None:
            self._materialize()
        return self._h

    @_hi.setter
    def _hi(self, v):
        self._h = v

    def _materialize(self) -> None:
        gen, cs = self.gen, self.coords
        ip = _int_poly(_charpoly(gen.poly, cs))
        chain = _chain_for(ip)
        cap = limits.current().bisection
        for _ in range(cap):
            lo, hi = _ieval(cs, gen._lo, gen._hi)
            if lo < hi and _rat_eval(ip, lo) != 0 and _rat_eval(ip, hi) != 0:
                if _count_open(chain, ip, lo, hi) == 1:
                    v = _normalize(ip, lo, hi)
                    self._p, self._l, self._h = v._p, v._l, v._h
                    return
            gen.bisect()
        raise ResourceCapError("bisection cap exceeded while isolating a field element")

    # -- construction ----------------------------------------------------
    @classmethod
    def from_interval(cls, p: Poly, lo: Fraction, hi: Fraction):
        """Root of ``p`` inside the open ``(lo, hi)``; Fraction if rational."""
        ip = _int_poly(p)
        chain = _chain_for(ip)
        lo, hi = Fraction(lo), Fraction(hi)
        cap = limits.current().bisection
        steps = 0
        while _rat_eval(ip, lo) == 0 or _rat_eval(ip, hi) == 0:
            lo, hi = lo - (hi - lo) / 7, hi + (hi - lo) / 11
            steps += 1
            if steps > cap:
                raise ResourceCapError("could not place interval endpoints")
        n = _count_open(chain, ip, lo, hi)
        if n != 1:
            raise ValueError(f"interval holds {n} roots, expected 1")
        return _normalize(ip, lo, hi)

    @classmethod
    def root(cls, p: Poly, k: int):
        """The k-th (1-based, ascending) real root of a rational polynomial."""
        return _root_cached(tuple(Fraction(c) for c in p.coeffs), k)

    # -- refinement --------------------------------------------------------
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def bisect(self) -> None:
        lo, hi = self._lo, self._hi
        mid = (lo + hi) / 2
        if _rat_eval(self.poly, mid) == 0:
            mid = (lo + 2 * hi) / 3
            if _rat_eval(self.poly, mid) == 0:
                mid = (2 * lo + hi) / 3
        chain = _chain_for(self.poly)
        if _count_open(chain, self.poly, lo, mid) == 1:
            self._hi = mid
        else:
            self._lo = mid

    def refine_to(self, width: Fraction) -> tuple[Fraction, Fraction]:
        cap = limits.current().bisection
        steps = 0
        while self._hi - self._lo > width:
            self.bisect()
            steps += 1
            if steps > cap:
                raise ResourceCapError("bisection cap exceeded")
        return self._lo, self._hi

    def _refine_excluding(self, q: Fraction) -> None:
        cap = limits.current().bisection
        steps = 0
        while self._lo <= q <= self._hi:
            self.bisect()
            steps += 1
            if steps > cap:
                raise ResourceCapError("bisection cap exceeded")

    # -- order -------------------------------------------------------------
    def sign(self) -> int:
        if self._p is None:
            return _fsign(self.gen, self.coords)
        self._refine_excluding(Fraction(0))
        return 1 if self._lo > 0 else -1

    def compare(self, other) -> int:
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if self._p is None:
                gen, cs = _field(self)
                return _fsign(gen, (cs[0] - q,) + cs[1:])
            self._refine_excluding(q)
            return 1 if self._lo > q else -1
        if not isinstance(other, RealAlg):
            return NotImplemented
        if _same_field(self, other):
            d = self - other
            return 0 if isinstance(d, Fraction) and d == 0 else sgn(d)
        if self.poly == other.poly:
            return self._compare_with_common(other, Poly(map(Fraction, self.poly)))
        return self._separate(other)

    def _compare_with_common(self, other: "RealAlg", g: Poly) -> int:
        gi = _int_poly(g)
        chain = _chain_for(gi)
        lo, hi = max(self._lo, other._lo), min(self._hi, other._hi)
        if lo < hi:
            # endpoints are non-roots of the operands, hence of g
            if _count_open(chain, gi, lo, hi) >= 1:
                return 0
        return self._separate(other)

    def _separate(self, other: "RealAlg") -> int:
        cap = limits.current().bisection
        steps = 0
        while not (self._hi <= other._lo or other._hi <= self._lo):
            self.bisect()
            other.bisect()
            steps += 1
            if steps > cap:
                raise ResourceCapError("bisection cap exceeded while separating")
        return -1 if self._hi <= other._lo else 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False
        if not isinstance(other, RealAlg):
            return NotImplemented
        if _same_field(self, other):
            return _field(self)[1] == _field(other)[1]
        return self.compare(other) == 0

    def __hash__(self):
        return hash(self.poly)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # -- arithmetic ----------------------------------------------------------
    def __neg__(self):
        gen, cs = _field(self)
        return _make(gen, tuple(-c for c in cs))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return self
            gen, cs = _field(self)
            return _make(gen, (cs[0] + q,) + cs[1:])
        if not isinstance(other, RealAlg):
            return NotImplemented
        if _same_field(self, other):
            gen, a = _field(self)
            b = _field(other)[1]
            n = max(len(a), len(b))
            a, b = a + (Fraction(0),) * (n - len(a)), b + (Fraction(0),) * (n - len(b))
            return _make(gen, tuple(x + y for x, y in zip(a, b)))
        return _combine(self, other, sum_polynomial(self.poly, other.poly), _iv_add)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RealAlg)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return Fraction(0)
            if q == 1:
                return self
            gen, cs = _field(self)
            return _make(gen, tuple(c * q for c in cs))
        if not isinstance(other, RealAlg):
            return NotImplemented
        if _same_field(self, other):
            gen, a = _field(self)
            return _make(gen, _fmul(a, _field(other)[1], gen.poly))
        return _combine(self, other, product_polynomial(self.poly, other.poly), _iv_mul)

    __rmul__ = __mul__

    def inverse(self):
        gen, cs = _field(self)
        return _make(gen, _finv(cs, gen.poly))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, RealAlg):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        result, base = Fraction(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- integer part ----------------------------------------------------------
    def __floor__(self) -> int:
        cap = limits.current().bisection
        steps = 0
        while True:
            lo, hi = self._lo, self._hi
            fl = math.floor(lo)
            if hi <= fl + 1:
                return fl
            self.bisect()
            steps += 1
            if steps > cap:
                raise ResourceCapError("bisection cap exceeded in floor")

    def __float__(self):
        lo, hi = self.refine_to(Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def root_index(self) -> int:
        chain = _chain_for(self.poly)
        below = variations_at_infinity(list(chain), False) - variations_at(list(chain), self._lo)
        return below + 1

    def __str__(self):
        p = Poly(self.poly)
        return f"root({p.to_str('t').replace(' ', '')}, {self.root_index()})"

    def __repr__(self):
        return f"RealAlg({self.poly}, {self._lo}, {self._hi})"


# -- arithmetic inside Q(gen) --------------------------------------------------

@lru_cache(maxsize=4096)
def _root_cached(cs: tuple[Fraction, ...], k: int):
    # one shared object per root keeps later arithmetic in a single field
    p = Poly(cs)
    ivs = isolate_real_roots(p)
    if not 1 <= k <= len(ivs):
        raise ValueError(f"polynomial has {len(ivs)} real roots, index {k} out of range")
    iv = ivs[k - 1]
    if not iv.lo_open:
        return Fraction(iv.lo)
    return _normalize(_int_poly(p), iv.lo, iv.hi)


def _field(a: RealAlg) -> tuple[RealAlg, tuple[Fraction, ...]]:
    if a.gen is not None:
        return a.gen, a.coords
    return a, (Fraction(0), Fraction(1))


def _same_field(a: RealAlg, b: RealAlg) -> bool:
    return _field(a)[0] is _field(b)[0]


def _trim(cs) -> tuple[Fraction, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _make(gen: RealAlg, cs):
    cs = _trim(cs)
    if len(cs) <= 1:
        return cs[0] if cs else Fraction(0)
    if cs == (0, 1):
        return gen
    return RealAlg._in_field(gen, cs)


def _reduce(cs, m: tuple[int, ...]) -> list[Fraction]:
    cs = list(cs)
    d = len(m) - 1
    lc = Fraction(m[-1])
    for i in range(len(cs) - 1, d - 1, -1):
        c = cs[i]
        if c:
            q = c / lc
            for j in range(d + 1):
                cs[i - d + j] -= q * m[j]
    return cs[:d]


def _fmul(a, b, m) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _reduce(out, m)


def _finv(a, m) -> list[Fraction]:
    """Inverse of ``a(gen)`` modulo the irreducible ``m``."""
    a = _trim(a)
    if not a:
        raise ZeroDivisionError("division by zero")
    r0, r1 = Poly(Fraction(c) for c in m), Poly(a)
    s0, s1 = Poly(), Poly([Fraction(1)])
    while r1.degree > 0:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r1.is_zero():
        raise ZeroDivisionError("division by zero")
    return _reduce([c / r1.coeffs[0] for c in s1.coeffs], m)


def _ieval(cs, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval hull of ``sum cs[i] * t**i`` over ``[lo, hi]``."""
    a = b = Fraction(0)
    for c in reversed(cs):
        ps = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(ps) + c, max(ps) + c
    return a, b


def _fsign(gen: RealAlg, cs) -> int:
    cs = _trim(cs)
    if len(cs) <= 1:
        return sgn(cs[0]) if cs else 0
    # a nonconstant reduced element of an irreducible extension is nonzero
    cap = limits.current().bisection
    for _ in range(cap):
        lo, hi = _ieval(cs, gen._lo, gen._hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        gen.bisect()
    raise ResourceCapError("bisection cap exceeded in sign determination")


def _charpoly(m: tuple[int, ...], cs) -> Poly:
    """Characteristic polynomial of ``cs(gen)`` over Q, from resultants."""
    den = 1
    for c in cs:
        den = math.lcm(den, Fraction(c).denominator)
    h = [int(Fraction(c) * den) for c in cs]
    d = len(m) - 1
    xs = list(range(d + 1))
    ys = []
    for s in xs:
        g = [s - h[0]] + [-c for c in h[1:]]
        ys.append(resultant(list(m), g))
    p = _interpolate(xs, ys)
    # roots of p are den * value; rescale to the value itself
    return Poly(c * den**i for i, c in enumerate(p.coeffs))


def _iv_add(a: RealAlg, b: RealAlg):
    return a._lo + b._lo, a._hi + b._hi


def _iv_mul(a: RealAlg, b: RealAlg):
    ps = [a._lo * b._lo, a._lo * b._hi, a._hi * b._lo, a._hi * b._hi]
    return min(ps), max(ps)


def _combine(a: RealAlg, b: RealAlg, raw: tuple[int, ...], iv_op):
    """Pick the root of ``raw`` that the operand intervals pin down."""
    ip = _int_poly(Poly(raw))
    chain = _chain_for(ip)
    cap = limits.current().bisection
    a = RealAlg(a.poly, a._lo, a._hi)
    b = RealAlg(b.poly, b._lo, b._hi)
    for _ in range(cap):
        lo, hi = iv_op(a, b)
        if _rat_eval(ip, lo) != 0 and _rat_eval(ip, hi) != 0:
            if _count_open(chain, ip, lo, hi) == 1:
                return _normalize(ip, lo, hi)
        a.bisect()
        b.bisect()
    raise ResourceCapError("bisection cap exceeded in algebraic arithmetic")


@lru_cache(maxsize=4096)
def _factors(ip: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Irreducible factors over Q, each primitive with positive lead."""
    import sympy

    t = sympy.Symbol("t")
    expr = sum(c * t**i for i, c in enumerate(ip))
    _, facs = sympy.factor_list(expr, t)
    out = []
    for f, _mult in facs:
        cs = [int(c) for c in reversed(sympy.Poly(f, t).all_coeffs())]
        if cs[-1] < 0:
            cs = [-c for c in cs]
        out.append(tuple(cs))
    return tuple(out)


def _normalize(ip: tuple[int, ...], lo: Fraction, hi: Fraction):
    """Return a Fraction when the isolated root is rational, else a RealAlg.

    The defining polynomial is cut down to the irreducible factor owning
    the root, so it is the minimal polynomial and degrees never compound.
    """
    if len(ip) == 2:
        return Fraction(-ip[0], ip[1])
    for f in _factors(ip):
        if len(f) == 2:
            r = Fraction(-f[0], f[1])
            if lo < r < hi:
                return r
            continue
        # endpoints are non-roots of ip, hence of every factor
        if _count_open(_chain_for(f), f, lo, hi) == 1:
            return RealAlg(f, lo, hi)
    raise AssertionError("isolated root not found in any factor")


def is_rational(v) -> bool:
    return isinstance(v, (int, Fraction))


def ra_floor(v) -> int:
    return math.floor(v)


def ra_add(a, b):
    return a + b


def ra_mul(a, b):
    return a * b


def ra_neg(a):
    return -a


def ra_inv(a):
    if is_rational(a):
        return 1 / Fraction(a)
    return a.inverse()


def ra_compare(a, b) -> int:
    """-1, 0, 1 for a < b, a == b, a > b on rationals and RealAlgs."""
    if isinstance(a, RealAlg):
        return a.compare(b)
    if isinstance(b, RealAlg):
        return -b.compare(a)
    return (a > b) - (a < b)
