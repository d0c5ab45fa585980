"""Elements of the real closure and the integer-part operations on them.

Every model's real closure sits inside the field of Puiseux series in
``1/x``, and the integer-part ring ``D`` (exponents >= 0, integer constant
term) is discretely ordered and contains each model.  Integer parts in
``D`` are unique, so a floor that falls outside the model certifies that
the model has no integer part for that root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, ResourceCapError
from .expansion import expansion_of, isolating_interval
from .fraction_field import Frac
from .models import ModelContext, ModelId
from .poly import Poly, sgn
from .puiseux import Puiseux
from .realalg import is_rational
from .results import Indeterminate, NotFound
from .roots import (RootElem, cmp_root_frac, counter_for, exact, normalize,
                    pseudo_gcd, roots_of, sign_at, squarefree)


@dataclass(frozen=True)
class IPFound:
    value: Puiseux

    def __bool__(self):
        return True


# -- term streams -------------------------------------------------------------

class _Stream:
    """Term access for a root, optionally negated."""

    def __init__(self, r: RootElem, neg: bool = False):
        self.exp = expansion_of(r)
        self.neg = neg

    def term(self, i):
        t = self.exp.term(i)
        if t is None or not self.neg:
            return t
        return t[0], -t[1]


def _rat_between(a, b) -> Fraction:
    """The simplest rational strictly between scalars ``a < b``."""
    if sgn(a) < 0 < sgn(b):
        return Fraction(0)
    if sgn(b) <= 0:
        return -_rat_between(-b, -a)
    fl = math.floor(a)
    if sgn(b - (fl + 1)) > 0:
        return Fraction(fl + 1)
    lo = 1 / (b - fl)
    if sgn(a - fl) == 0:
        return fl + 1 / Fraction(math.floor(lo) + 1)
    return fl + 1 / _rat_between(lo, 1 / (a - fl))


def first_difference(r: _Stream, s: _Stream):
    """Walk two expansions to their first difference.

    Returns ``(prefix terms, q, a, b, i)`` where ``a`` and ``b`` are the
    coefficients of ``x**q`` in ``r`` and ``s`` after the common prefix
    (0 when absent) and ``i`` the position in the streams; None if equal.
    """
    prefix = []
    i = 0
    while True:
        tr, ts = r.term(i), s.term(i)
        if tr is None and ts is None:
            return None
        if tr is not None and ts is not None and tr[0] == ts[0] and sgn(tr[1] - ts[1]) == 0:
            prefix.append(tr)
            i += 1
            continue
        qs = [t[0] for t in (tr, ts) if t is not None]
        q = max(qs)
        a = tr[1] if tr is not None and tr[0] == q else Fraction(0)
        b = ts[1] if ts is not None and ts[0] == q else Fraction(0)
        return prefix, q, a, b, i


def _index_in(r: RootElem, g: Poly) -> int | None:
    """Index of ``r`` among the roots of a factor ``g`` of its polynomial."""
    lo, hi = isolating_interval(r)
    cg = counter_for(g)
    if lo is None:
        return 1 if cg.total == 1 else None
    if lo == hi:
        return cg.n_le(lo) if sign_at(g, lo) == 0 else None
    return cg.n_le(lo) + 1 if cg.count_open(lo, hi) else None


def compare_roots(r: RootElem, s: RootElem) -> int:
    if r.defining == s.defining:
        return (r.index > s.index) - (r.index < s.index)
    g = squarefree(pseudo_gcd(r.defining, s.defining))
    if g.degree > 0:
        i = _index_in(r, g)
        if i is not None and i == _index_in(s, g):
            return 0
    d = first_difference(_Stream(r), _Stream(s))
    if d is None:
        return 0
    _, _, a, b, _ = d
    return sgn(a - b)


def p_between(r: RootElem, s: RootElem) -> Puiseux:
    """A finite Puiseux element strictly between ``r < s``."""
    d = first_difference(_Stream(r), _Stream(s))
    if d is None or sgn(d[2] - d[3]) >= 0:
        raise PreconditionError("expected r < s")
    prefix, q, a, b, _ = d
    return Puiseux(prefix) + Puiseux.monomial(_rat_between(a, b), q)


def above(r: RootElem) -> Puiseux:
    """An element strictly above ``r``."""
    t = _Stream(r).term(0)
    if t is None:
        return Puiseux.const(1)
    q, c = t
    if sgn(c) < 0:
        return Puiseux()
    return Puiseux.monomial(math.floor(c) + 1, q)


def below(r: RootElem) -> Puiseux:
    return -above(r.negated())


# -- integer parts in D --------------------------------------------------------

def floor_in_d(r: RootElem) -> Puiseux:
    """The unique ``m`` in D with ``m <= r < m + 1``."""
    exp = expansion_of(r)
    pos = []
    c0 = Fraction(0)
    i = 0
    while True:
        t = exp.term(i)
        if t is None or t[0] < 0:
            break
        if t[0] > 0:
            pos.append(t)
        else:
            c0 = t[1]
        i += 1
    base = Puiseux(pos)
    if is_rational(c0) and Fraction(c0).denominator == 1:
        m = base + int(c0)
        if cmp_root_frac(r, m) < 0:
            m = m - 1
    else:
        m = base + math.floor(c0)
    if cmp_root_frac(r, m) < 0 or cmp_root_frac(r, m + 1) >= 0:
        raise AssertionError("integer part certification failed")
    return m


def _uniqueness(m: ModelContext, v: Puiseux, what: str) -> str:
    why = m.violation(v)
    return (f"the {what} in the Shepherdson ring is {v.format(m.var)}, which is not in "
            f"{m.id.name} ({why}); {what}s are unique in any discretely ordered ring "
            f"containing both, so none exists in {m.id.name}")


def ip_root(r: RootElem, m: ModelContext):
    """Integer part of ``r`` in the model: IPFound, NotFound or Indeterminate."""
    from . import limits

    try:
        with limits.using(m.limits):
            v = floor_in_d(r)
    except ResourceCapError as exc:
        return Indeterminate(str(exc))
    if m.contains(v):
        return IPFound(v)
    return NotFound(_uniqueness(m, v, "integer part"))


# -- density of the fraction field ------------------------------------------

def _admissible(m: ModelContext, q, c) -> bool:
    return m.admits_exponent(q) and (m.id is ModelId.SHEPHERDSON or is_rational(c))


def _lattice_strictly_between(m: ModelContext, lo, hi):
    """An admitted exponent ``e`` with ``lo < e < hi`` (lo may be None)."""
    if m.id is ModelId.SHEPHERDSON:
        return hi - 1 if lo is None else (lo + hi) / 2
    if m.id is ModelId.Z:
        cand = Fraction(0)
    else:
        cand = Fraction(math.ceil(hi) - 1)
    if cand < hi and (lo is None or cand > lo):
        return cand
    return None


def _ff_between(m: ModelContext, r: _Stream, s: _Stream):
    d = first_difference(r, s)
    if d is None or sgn(d[2] - d[3]) >= 0:
        raise PreconditionError("expected r < s")
    prefix, q, a, b, i = d
    var = m.var
    for e, c in prefix:
        if not _admissible(m, e, c):
            return NotFound(
                f"both endpoints share the term {Puiseux.monomial(c, e).format(var)} "
                f"whose exponent or coefficient is not available in the fraction field; "
                f"every element strictly between them has that term too")
    base = Puiseux(prefix)
    if sgn(a) < 0 < sgn(b):
        return base
    if sgn(b) <= 0:
        out = _ff_between(m, _negated(s), _negated(r))
        return out if isinstance(out, NotFound) else -out
    # here 0 <= a < b
    if m.admits_exponent(q):
        return base + Puiseux.monomial(_rat_between(a, b), q)
    if sgn(a) > 0:
        return NotFound(
            f"every element strictly between them exceeds the shared prefix by a positive "
            f"multiple of {Puiseux.monomial(1, q).format(var)} plus lower terms, and that "
            f"exponent is outside the fraction field's value group")
    # a == 0: r - base is below x**q in magnitude
    tr = r.term(i)
    if tr is None:  # r == base
        e = _lattice_strictly_between(m, None, q)
        if e is None:
            return NotFound(f"no admissible exponent below {q}")
        return base + Puiseux.monomial(1, e)
    qr, cr = tr
    if sgn(cr) < 0:
        return base
    e = _lattice_strictly_between(m, qr, q)
    if e is not None:
        return base + Puiseux.monomial(1, e)
    if m.admits_exponent(qr):
        return base + Puiseux.monomial(_rat_between(cr, cr + 1), qr)
    return NotFound(
        f"the gap lies strictly between exponents {qr} and {q}, which contains no "
        f"exponent of the fraction field's value group")


class _Negated(_Stream):
    def __init__(self, base: _Stream):
        self.base = base

    def term(self, i):
        t = self.base.term(i)
        return None if t is None else (t[0], -t[1])


def _negated(s: _Stream) -> _Stream:
    return _Negated(s)


def dense_between(m: ModelContext, r: RootElem, s: RootElem):
    """``f`` in FF(M) with ``r < f < s``, NotFound, or Indeterminate."""
    from . import limits

    if compare_roots(r, s) >= 0:
        raise PreconditionError("expected r < s")
    try:
        with limits.using(m.limits):
            out = _ff_between(m, _Stream(r), _Stream(s))
    except ResourceCapError as exc:
        return Indeterminate(str(exc))
    if isinstance(out, NotFound):
        return out
    f = Frac(out)
    if cmp_root_frac(r, f) >= 0 or cmp_root_frac(s, f) <= 0:
        raise AssertionError("density witness certification failed")
    return f


# -- small fractions and l/m bounds -------------------------------------------

def reciprocal(r: RootElem) -> RootElem:
    """``1/r`` for a positive root."""
    p = r.defining
    c = r.counter
    n_le0 = c.n_le(Frac(0))
    zero = 1 if sign_at(p, Frac(0)) == 0 else 0
    n_neg = n_le0 - zero
    n_pos = c.total - n_le0
    rank = r.index - n_le0
    rev = squarefree(Poly(reversed(p.coeffs)))
    return RootElem(rev, n_neg + n_pos - rank + 1)


def lemma_small_fraction(m: ModelContext, r: RootElem) -> Puiseux:
    """``m`` in M with ``1/m < r`` for a positive root ``r``."""
    if cmp_root_frac(r, Frac(0)) <= 0:
        raise PreconditionError("expected r > 0")
    inv = reciprocal(r)
    q, c = expansion_of(inv).term(0)
    if q > 0:
        v = Puiseux.monomial(1, math.floor(q) + 1)
    else:
        v = floor_in_d(inv) + 1
    if m.id is ModelId.Z and not m.contains(v):
        raise AssertionError("Z roots have bounded reciprocals")
    if cmp_root_frac(r, Frac(1, v)) <= 0:
        raise AssertionError("small fraction certification failed")
    return v


@dataclass(frozen=True)
class LM:
    l: Puiseux
    m: Puiseux


def find_l_m(model: ModelContext, r: RootElem):
    """``l > 0`` and ``m`` in M with ``m <= l*r < m + l``."""
    from . import limits

    try:
        with limits.using(model.limits):
            out = _find_l_m(model, r)
    except ResourceCapError as exc:
        return Indeterminate(str(exc))
    if isinstance(out, LM):
        lo, hi = Frac(out.m, out.l), Frac(out.m + out.l, out.l)
        if cmp_root_frac(r, lo) < 0 or cmp_root_frac(r, hi) >= 0:
            raise AssertionError("l, m certification failed")
    return out


def _find_l_m(model: ModelContext, r: RootElem):
    p = r.defining
    if p.degree == 1:
        v = Frac(-p.coeffs[0], p.coeffs[1])
        if model.in_fraction_field(v.num) and v.den == 1:
            num, den = model.as_fraction(v.num)
            return LM(den, num)
    ip = ip_root(r, model)
    if isinstance(ip, IPFound):
        return LM(model.one, ip.value)
    f = dense_between(model, r, r.shifted(1))
    if isinstance(f, Indeterminate):
        return f
    if isinstance(f, NotFound):
        # m/l + 1 would lie in (r, r + 1]; r itself is not in the fraction
        # field, otherwise the open interval would contain r + 1/2
        return NotFound(f"no l, m exist: {f.certificate}")
    num, den = model.as_fraction((f - 1).num)
    return LM(den, num)


def ipi_check(model: ModelContext, f: Poly, a: Puiseux, b: Puiseux, y: Puiseux):
    """``x`` in ``[a, b)`` with ``f(x) <= y < f(x+1)``: IPFound, NotFound or
    Indeterminate.

    Any such ``x`` is the integer part of a root of ``f(t) - y`` lying in
    ``[x, x+1)``, so scanning the integer parts of those roots is complete.
    """
    model.check(a, b, y, *f.coeffs)
    if a.compare(b) >= 0:
        raise PreconditionError("antecedent violated: a < b")
    if f(a).compare(y) > 0:
        raise PreconditionError("antecedent violated: f(a) <= y")
    if y.compare(f(b)) >= 0:
        raise PreconditionError("antecedent violated: y < f(b)")
    g = f - Poly([y])
    notes = []
    from . import limits

    for beta in roots_of(g):
        if cmp_root_frac(beta, Frac(a)) < 0:
            continue
        try:
            with limits.using(model.limits):
                x = floor_in_d(beta)
        except ResourceCapError as exc:
            return Indeterminate(str(exc))
        shown = x.format(model.var)
        if not model.contains(x):
            notes.append(f"{shown} (not in the model)")
            continue
        if x.compare(a) < 0 or x.compare(b) >= 0 or x.sign() < 0:
            notes.append(f"{shown} (outside [a, b) or negative)")
            continue
        if f(x).compare(y) <= 0 and y.compare(f(x + 1)) < 0:
            return IPFound(x)
        notes.append(f"{shown} (consequent false)")
    return NotFound("any witness is the integer part of a root of f(t) - y in [a, oo); "
                    "the candidates are " + (", ".join(notes) or "none"))


# -- model points in intervals ------------------------------------------------

class _Tail:
    """Terms of a stream from position ``start`` on, optionally negated."""

    def __init__(self, stream, start: int = 0, neg: bool = False):
        self.stream, self.start, self.neg = stream, start, neg

    def term(self, i):
        t = self.stream.term(self.start + i)
        if t is None or not self.neg:
            return t
        return t[0], -t[1]


def _poly_above(lo: _Tail, k_max) -> Puiseux | None:
    """An element of Z[X] of degree <= k_max above ``lo`` (k_max None: any)."""
    t = lo.term(0)
    if t is None:
        return Puiseux.const(1) if k_max is None or k_max >= 0 else None
    q, c = t
    if sgn(c) < 0:
        return Puiseux()
    if q < 0:
        return Puiseux.const(1) if k_max is None or k_max >= 0 else None
    if q.denominator == 1 and (k_max is None or q <= k_max):
        return Puiseux.monomial(math.floor(c) + 1, q)
    k = math.floor(q) + 1
    if k_max is None or k <= k_max:
        return Puiseux.monomial(1, k)
    return None


def _zx_between(lo: _Tail, hi: _Tail | None) -> Puiseux | None:
    """An element of Z[X] strictly between two streams; None if there is none."""
    if hi is None:
        return _poly_above(lo, None)
    d = first_difference(lo, hi)
    prefix, q, a, b, i = d
    for e, c in prefix:
        if e < 0 or e.denominator != 1 or not is_rational(c) or Fraction(c).denominator != 1:
            return None
    base = Puiseux(prefix)
    if sgn(a) < 0 < sgn(b):
        return base
    if sgn(b) <= 0:
        out = _zx_between(_Tail(hi.stream, hi.start + i, not hi.neg),
                          _Tail(lo.stream, lo.start + i, not lo.neg))
        return None if out is None else base - out
    lo_rest = _Tail(lo.stream, lo.start + i, lo.neg)
    if q < 0:
        return None
    if q.denominator != 1:
        if sgn(a) > 0:
            return None
        g = _poly_above(lo_rest, math.ceil(q) - 1)
        return None if g is None else base + g
    # q is a natural number and 0 <= a < b
    d_int = math.floor(a) + 1
    if sgn(b - d_int) > 0:
        return base + Puiseux.monomial(d_int, q)
    mono = lambda c: Puiseux.monomial(c, q)
    if is_rational(a) and Fraction(a).denominator == 1:
        skip = 1 if sgn(a) != 0 else 0
        g = _poly_above(_Tail(lo.stream, lo.start + i + skip, lo.neg), q - 1)
        if g is not None:
            return base + mono(int(a)) + g
    if is_rational(b) and Fraction(b).denominator == 1:
        g = _poly_above(_Tail(hi.stream, hi.start + i + 1, not hi.neg), q - 1)
        if g is not None:
            return base + mono(int(b)) - g
    return None


def model_point(m: ModelContext, lo: RootElem, hi: RootElem | None, lo_closed: bool = False):
    """An element of M in the interval from ``lo`` to ``hi`` (open at ``hi``,
    None meaning infinity): a Puiseux value, NotFound or Indeterminate."""
    from . import limits

    try:
        with limits.using(m.limits):
            out = _model_point(m, lo, hi, lo_closed)
    except ResourceCapError as exc:
        return Indeterminate(str(exc))
    if isinstance(out, Puiseux):
        c = cmp_root_frac(lo, Frac(out))
        if (c > 0 or (c == 0 and not lo_closed)) or (
                hi is not None and cmp_root_frac(hi, Frac(out)) <= 0) or not m.contains(out):
            raise AssertionError("model point certification failed")
    return out


def _model_point(m: ModelContext, lo, hi, lo_closed):
    ip = ip_root(lo, m)
    if isinstance(ip, Indeterminate):
        return ip
    if isinstance(ip, IPFound):
        v = ip.value
        if not (lo_closed and cmp_root_frac(lo, Frac(v)) == 0):
            v = v + 1
        if hi is None or cmp_root_frac(hi, Frac(v)) > 0:
            return v
        return NotFound("the least element of the model above the lower endpoint "
                        f"is {v.format(m.var)}, which is not below the upper endpoint")
    if m.id is not ModelId.ZX_LEX:
        return Indeterminate("no integer part for the lower endpoint")
    # lo has no integer part, so lo is not in M and closedness is irrelevant
    out = _zx_between(_Tail(_Stream(lo)), None if hi is None else _Tail(_Stream(hi)))
    if out is None:
        return NotFound("no element of Z[X] fits between the endpoints: they agree on "
                        "terms outside Z[X] or leave no room on the exponent lattice")
    return out


__all__ = [
    "IPFound", "LM", "above", "below", "compare_roots", "dense_between",
    "find_l_m", "floor_in_d", "ip_root", "ipi_check", "lemma_small_fraction", "model_point",
    "p_between", "reciprocal", "exact", "roots_of", "counter_for", "normalize",
]
