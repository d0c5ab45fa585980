"""Puiseux expansions of indexed roots.

Each step shifts the polynomial to the current approximation ``s``,
reads candidate next terms ``c * x**q`` off the Newton polygon, and uses
Sturm counts on the brackets ``s + (lo..hi) * x**q`` to decide which
candidate carries the tracked root.  Exponents strictly decrease, so the
terms come out in order; an exact hit ends the expansion.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import limits
from .errors import ResourceCapError
from .fraction_field import Frac
from .poly import Poly, sgn
from .puiseux import Puiseux
from .realalg import RealAlg, count_real_roots, Interval, is_rational
from .roots import RootElem, cmp_root_frac, sign_at


@dataclass(frozen=True)
class PuiseuxExpansion:
    terms: tuple[tuple[Fraction, object], ...]
    truncation: Fraction | None  # exponent of the first omitted term
    exact: bool

    def value(self) -> Puiseux:
        return Puiseux(self.terms)


def _upper_hull(points):
    hull = []
    for p in points:
        while len(hull) >= 2:
            (ox, oy), (ax, ay) = hull[-2], hull[-1]
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_edges(g: Poly):
    """``(q, chi)`` per Newton polygon edge, ascending in ``q``.

    A nonzero root of ``g`` with leading term ``c * x**q`` has ``c`` a root
    of the edge polynomial ``chi`` of slope ``q``.
    """
    pts = [(i, c.degree) for i, c in enumerate(g.coeffs) if c]
    hull = _upper_hull(pts)
    out = []
    for (i, vi), (j, vj) in zip(hull, hull[1:]):
        q = Fraction(vi - vj) / (j - i)
        level = vi + i * q
        chi = [0] * (j - i + 1)
        for k, vk in pts:
            if i <= k <= j and vk + k * q == level:
                chi[k - i] = g.coeffs[k].lc
        out.append((q, Poly(chi)))
    return out


def _rational_root_window(chi: Poly, c: Fraction) -> tuple[Fraction, Fraction]:
    d = Fraction(1)
    while True:
        lo, hi = c - d, c + d
        if lo > 0 and chi(lo) != 0 and chi(hi) != 0 and count_real_roots(chi, Interval(lo, hi)) == 1:
            return lo, hi
        d /= 2


def _window(chi: Poly, v) -> tuple[Fraction, Fraction]:
    if isinstance(v, Fraction):
        return _rational_root_window(chi, v)
    v.sign()  # refines the interval away from zero
    lo, hi = v.interval()
    return lo, hi


def positive_roots(chi: Poly):
    """Ascending ``(c, lo, hi)`` for the positive roots of a scalar polynomial.

    ``(lo, hi)`` is a rational window with ``0 < lo`` holding only ``c``.
    """
    while chi.coeffs and chi.coeffs[0] == 0:
        chi = Poly(chi.coeffs[1:])
    if chi.degree <= 0:
        return []
    if not all(is_rational(c) for c in chi.coeffs):
        lc = chi.lc
        scaled = Poly(c / lc for c in chi.coeffs)
        if all(is_rational(c) for c in scaled.coeffs):
            chi = Poly(Fraction(c) for c in scaled.coeffs)
        elif chi.degree == 1:
            c = -chi.coeffs[0] / chi.coeffs[1]
            if sgn(c) <= 0:
                return []
            if isinstance(c, Fraction):
                return [(c, c / 2, 2 * c)]
            return [(c, *_window(chi, c))]
        else:
            raise ResourceCapError("characteristic equation with algebraic coefficients of degree >= 2")
    chi = Poly(Fraction(c) for c in chi.coeffs)
    out = []
    n = count_real_roots(chi)
    for k in range(1, n + 1):
        v = RealAlg.root(chi, k)
        if sgn(v) > 0:
            out.append((v, *_window(chi, v)))
    return out


class Expansion:
    """Lazily computed expansion of one root; safe to share across threads."""

    def __init__(self, root: RootElem):
        self.root = root
        self.terms: list[tuple[Fraction, object]] = []
        self.approx = Puiseux()
        self.exact = False
        self.bracket: tuple[Frac, Frac] | None = None
        self._lock = threading.Lock()
        if root.counter.total == 1:
            self.bracket = (None, None)

    def term(self, i: int):
        """The ``i``-th term (0-based) or None when the expansion ended."""
        with self._lock:
            while len(self.terms) <= i and not self.exact:
                self._step()
            return self.terms[i] if i < len(self.terms) else None

    def terms_down_to(self, floor_exp: Fraction):
        """All terms with exponent >= ``floor_exp``; also the next exponent."""
        i = 0
        while True:
            t = self.term(i)
            if t is None:
                return list(self.terms[:i]), None
            if t[0] < floor_exp:
                return list(self.terms[:i]), t[0]
            i += 1

    def _step(self):
        r = self.root
        s = self.approx
        sigma = cmp_root_frac(r, s)
        if sigma == 0:
            self.exact = True
            return
        cap = limits.current()
        if len(self.terms) >= cap.terms:
            raise ResourceCapError(f"expansion exceeded {cap.terms} terms")
        p = r.defining
        counter = r.counter
        n_le = counter.n_le(s)
        if sigma > 0:
            rank = r.index - n_le
        else:
            rank = n_le - (1 if sign_at(p, s) == 0 else 0) - r.index + 1
        g = p.shift(s)
        if sigma < 0:
            g = g.mirror()
        for q, chi in newton_edges(g):
            for c, lo, hi in positive_roots(chi):
                mono = Puiseux.monomial(1, q)
                a = s + mono * (sigma * lo)
                b = s + mono * (sigma * hi)
                if sigma < 0:
                    a, b = b, a
                n = counter.count_open(a, b)
                if rank <= n:
                    if n == 1 and self.bracket is None:
                        self.bracket = (Frac(a), Frac(b))
                    coeff = c if sigma > 0 else -c
                    if q.denominator > cap.exponent_den:
                        raise ResourceCapError("exponent denominator cap exceeded")
                    self.terms.append((q, coeff))
                    self.approx = s + Puiseux.monomial(coeff, q)
                    return
                rank -= n
        raise AssertionError("root not located by any Newton polygon cluster")


@lru_cache(maxsize=4096)
def expansion_of(r: RootElem) -> Expansion:
    return Expansion(r)


def expand(r: RootElem, floor_exponent) -> PuiseuxExpansion:
    """Terms of the root with exponent >= ``floor_exponent``."""
    terms, nxt = expansion_of(r).terms_down_to(Fraction(floor_exponent))
    return PuiseuxExpansion(tuple(terms), nxt, nxt is None)


def newton_puiseux_expand(p: Poly, index: int, floor_exponent) -> PuiseuxExpansion:
    """Expansion of the ``index``-th real root of ``p`` down to ``floor_exponent``."""
    from .errors import PreconditionError
    from .roots import root_elem

    try:
        r = root_elem(p, index)
    except PreconditionError as exc:
        raise PreconditionError(f"selected branch is not real ({exc})") from None
    return expand(r, floor_exponent)


def isolating_interval(r: RootElem) -> tuple[Frac | None, Frac | None]:
    """An open interval with fraction endpoints holding only this root.

    ``None`` endpoints stand for minus and plus infinity.
    """
    e = expansion_of(r)
    i = 0
    while e.bracket is None:
        if e.term(i) is None:
            v = Frac(e.approx)
            return v, v
        i += 1
    return e.bracket
