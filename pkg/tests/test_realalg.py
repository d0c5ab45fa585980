import math
from fractions import Fraction as F

import pytest

from openind.poly import Poly
from openind.realalg import (Interval, RealAlg, count_real_roots, isolate_real_roots, ra_compare,
                             sturm_chain)

from oracles import count_roots


def P(*cs):
    return Poly(F(c) for c in cs)


SQRT2 = RealAlg.root(P(-2, 0, 1), 2)
SQRT3 = RealAlg.root(P(-3, 0, 1), 2)
SQRT6 = RealAlg.root(P(-6, 0, 1), 2)


def test_sturm_chain_quadratic():
    assert sturm_chain(P(-2, 0, 1)) == [P(-2, 0, 1), P(0, 2), P(2)]


def test_sturm_chain_linear():
    assert sturm_chain(P(-5, 1)) == [P(-5, 1), P(1)]


def test_sturm_chain_cubic():
    # frozen from an independent remainder sequence
    assert sturm_chain(P(0, -1, 0, 1)) == [P(0, -1, 0, 1), P(-1, 0, 3), P(0, F(2, 3)), P(1)]


def test_sturm_chain_zero():
    with pytest.raises(ValueError, match="zero polynomial has no Sturm chain"):
        sturm_chain(Poly())


@pytest.mark.parametrize("coeffs, lo, hi, n", [
    ((-2, 0, 1), 0, 2, 1),
    ((1, 0, 1), -10, 10, 0),
    ((0, -1, 0, 1), -2, 2, 3),
])
def test_count_real_roots(coeffs, lo, hi, n):
    assert count_real_roots(P(*coeffs), Interval(F(lo), F(hi))) == n


def test_count_closed_endpoints():
    p = P(0, -1, 0, 1)
    assert count_real_roots(p, Interval(F(-1), F(1), False, False)) == 3
    assert count_real_roots(p, Interval(F(-1), F(1))) == 1


def test_isolate_sqrt2():
    ivs = isolate_real_roots(P(-2, 0, 1))
    assert len(ivs) == 2
    lo, hi = ivs[1].lo, ivs[1].hi
    assert count_roots([-2, 0, 1], lo, hi) == 1
    assert 0 <= lo and lo * lo < 2 < hi * hi


def test_isolate_constant():
    assert isolate_real_roots(P(5)) == []


def test_isolate_double_root():
    ivs = isolate_real_roots(P(0, 0, 1))
    assert len(ivs) == 1
    assert ivs[0].lo <= 0 <= ivs[0].hi


def test_add_negation_is_zero():
    assert SQRT2 + (-SQRT2) == 0


def test_square_is_two():
    assert SQRT2 * SQRT2 == 2


def test_double_sqrt2():
    s = SQRT2 + SQRT2
    # minimal polynomial frozen from an independent computation
    assert s.poly == (-8, 0, 1)
    assert s.sign() > 0


def test_product_identity():
    assert ra_compare(SQRT2 * SQRT3, SQRT6) == 0


def test_compare_rational():
    assert ra_compare(SQRT2, F(3, 2)) == -1
    assert ra_compare(SQRT2, SQRT2) == 0


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        SQRT2 / 0


def test_floor():
    assert math.floor(SQRT2) == 1
    assert math.floor(-SQRT2) == -2
    assert math.floor(F(3)) == 3


def test_rational_root_comes_back_rational():
    assert RealAlg.root(P(-1, 0, 1), 2) == F(1)
    assert isinstance(RealAlg.root(P(-1, 0, 1), 2), F)


def test_root_index_out_of_range():
    with pytest.raises(ValueError, match="index 3 out of range"):
        RealAlg.root(P(-2, 0, 1), 3)


def test_functional_forms():
    from openind.realalg import ra_add, ra_floor, ra_inv, ra_mul, ra_neg

    assert ra_add(SQRT2, ra_neg(SQRT2)) == 0
    assert ra_mul(SQRT2, SQRT3) == SQRT6
    assert ra_mul(SQRT2, ra_inv(SQRT2)) == 1
    assert ra_inv(F(2, 3)) == F(3, 2)
    assert ra_floor(SQRT6) == 2
