"""Independent reference computations used to freeze expected values.

None of these share code with the package: root counts use Descartes'
rule on Moebius-transformed polynomials, ordering of Puiseux elements
uses high precision substitution of a huge x.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath


def _taylor_shift(p, c):
    p = list(p)
    n = len(p)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            p[j] += c * p[j + 1]
    return p


def _sign_changes(cs) -> int:
    signs = [c > 0 for c in cs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _roots_in_unit(p) -> int:
    """Distinct roots of square-free ``p`` in the open interval (0, 1)."""
    # x -> 1/(1+x) maps (0, inf) onto (0, 1)
    q = _taylor_shift(list(reversed(p)), 1)
    v = _sign_changes(q)
    if v <= 1:
        return v
    half = [c / 2**i for i, c in enumerate(p)]
    n = _roots_in_unit(half)
    if half and sum(half) == 0:
        n += 1
    return n + _roots_in_unit(_taylor_shift(half, 1))


def _squarefree(p):
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c) * t**i for i, c in enumerate(p))
    sf = sympy.sqf_part(sympy.Poly(expr, t))
    return [Fraction(str(c)) for c in reversed(sf.all_coeffs())]


def count_roots(p, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of ``p`` (ascending coefficients) in ``(lo, hi]``."""
    p = _squarefree(p)
    if len(p) <= 1:
        return 0
    w = hi - lo
    # (lo, hi] -> (0, 1] by x = lo + w*u
    q = [Fraction(0)] * len(p)
    pw = [c * w**i for i, c in enumerate(p)]
    q = _taylor_shift(pw, lo / w)
    n = _roots_in_unit(q)
    if sum(q) == 0:
        n += 1
    return n


def cauchy(p) -> Fraction:
    return 1 + max(abs(Fraction(c) / p[-1]) for c in p[:-1])


def numeric(terms, x_exp: int = 60, dps: int = 400):
    """Value of ``sum c * x**e`` at x = 10**x_exp with floats for RealAlg."""
    mpmath.mp.dps = dps
    x = mpmath.mpf(10) ** x_exp
    total = mpmath.mpf(0)
    for e, c in terms:
        cv = mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(float(c))
        total += cv * x ** (mpmath.mpf(e.numerator) / e.denominator)
    return total
