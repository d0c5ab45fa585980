"""Algebraic laws and cross-checks against independent oracles."""
import math
from fractions import Fraction as F

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from openind.formulas import compile_formula, evaluate, parse_formula
from openind.fraction_field import Frac, euclid_div, frac_integer_part
from openind.models import SHEP, ZX, Z
from openind.poly import Poly
from openind.puiseux import Puiseux
from openind.rc import IPFound, ip_root
from openind.realalg import Interval, RealAlg, count_real_roots
from openind.results import NotFound
from openind.roots import roots_of

from oracles import cauchy, count_roots, numeric

small = st.integers(-6, 6)
exps = st.sampled_from([F(0), F(1, 2), F(1), F(3, 2), F(2)])


@st.composite
def shep(draw):
    terms = draw(st.lists(st.tuples(exps, small), max_size=3))
    return Puiseux([(e, c if e == 0 else F(c, draw(st.integers(1, 3)))) for e, c in terms])


@st.composite
def zx(draw):
    return Puiseux([(e, c) for e, c in enumerate(draw(st.lists(small, max_size=3)))])


elements = st.one_of(shep(), zx())
laws = settings(max_examples=60, deadline=None)


@laws
@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == Puiseux()


@laws
@given(shep(), shep(), shep())
def test_order_axioms(a, b, c):
    if a.compare(b) <= 0:
        assert (a + c).compare(b + c) <= 0
    if a.sign() >= 0 and b.sign() >= 0:
        assert (a * b).sign() >= 0


@laws
@given(shep())
def test_sign_matches_numeric_oracle(a):
    v = numeric(a.terms)
    assert a.sign() == (v > 0) - (v < 0)


@laws
@given(shep())
def test_discreteness(a):
    assert SHEP.contains(a)
    if a.sign() > 0:
        assert a.compare(Puiseux.const(1)) >= 0


@st.composite
def fracs(draw):
    return Frac(draw(shep()), _positive(draw(shep())))


def _positive(d):
    return d if d.sign() > 0 else -d if d.sign() < 0 else Puiseux.const(1)


@laws
@given(fracs(), fracs(), fracs())
def test_fraction_field_laws(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a.sign() != 0:
        assert a * a.inverse() == Frac(Puiseux.const(1))
    if a.compare(b) < 0:
        assert (a + c).compare(b + c) < 0


@laws
@given(st.integers(-500, 500), st.integers(1, 50))
def test_euclid_invariant_z(n, k):
    d = euclid_div(Z, Z.from_int(n), Z.from_int(k))
    assert (d.quotient.constant_value(), d.remainder.constant_value()) == divmod(n, k)


@laws
@given(shep(), shep())
def test_euclid_invariant_shep(n, k):
    k = _positive(k)
    d = euclid_div(SHEP, n, k)
    assert d.quotient * k + d.remainder == n
    assert d.remainder.sign() >= 0 and (k - d.remainder).sign() > 0


@laws
@given(zx(), st.integers(1, 5))
def test_zx_division_found_or_refuted(n, k):
    d = euclid_div(ZX, n, Puiseux.const(k))
    if isinstance(d, NotFound):
        # the unique candidate quotient has a non-integer coefficient
        assert any(F(c).denominator != 1 for _, c in euclid_div(SHEP, n, Puiseux.const(k)).quotient.terms)
    else:
        assert d.quotient * k + d.remainder == n
        assert ZX.contains(d.quotient)


@laws
@given(fracs())
def test_frac_floor(f):
    m = frac_integer_part(SHEP, f)
    assert Frac(m) <= f < Frac(m + 1)


rat_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda cs: cs[-1] != 0)


@settings(max_examples=150, deadline=None)
@given(rat_polys)
def test_sturm_count_matches_descartes_oracle(cs):
    b = cauchy(cs)
    p = Poly(F(c) for c in cs)
    assert count_real_roots(p, Interval(-b, b, True, False)) == count_roots(cs, -b, b)


@laws
@given(rat_polys, st.integers(1, 6))
def test_realalg_floor(cs, k):
    p = Poly(F(c) for c in cs)
    n = count_real_roots(p)
    assume(n > 0)
    r = RealAlg.root(p, (k - 1) % n + 1)
    fl = math.floor(r)
    assert fl <= r and r < fl + 1


@laws
@given(rat_polys, st.integers(1, 6))
def test_ip_root_matches_realalg_floor(cs, k):
    rs = roots_of(Poly(Puiseux.const(c) for c in cs))
    assume(rs)
    r = rs[(k - 1) % len(rs)]
    p = Poly(F(c) for c in cs)
    assert ip_root(r, Z) == IPFound(Z.from_int(math.floor(RealAlg.root(p, r.index))))


formulas = st.sampled_from([
    "x*x <= y1", "2*x + 1 = y1", "!(x*x*x <= y1 + x) | x <= 3", "x*y1 <= y1*y1 & 0 <= x",
])


@laws
@given(formulas, st.integers(-30, 30), st.integers(1, 7), st.integers(-20, 20))
def test_eval_matches_compiled_system(text, num, den, y):
    f = parse_formula(text)
    params = [Z.from_int(y)]
    x = Frac(Z.from_int(num), Z.from_int(den))
    assert evaluate(f, x, params, Z) == compile_formula(f, params).eval_at(x)
