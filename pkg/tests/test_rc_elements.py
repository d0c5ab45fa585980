from fractions import Fraction as F

import pytest

from openind.errors import PreconditionError
from openind.expansion import isolating_interval, newton_puiseux_expand
from openind.fraction_field import Frac
from openind.models import SHEP, ZX, Z
from openind.rc import (LM, IPFound, compare_roots, dense_between, find_l_m, ip_root, ipi_check,
                        lemma_small_fraction)
from openind.results import NotFound
from openind.roots import cmp_root_frac, exact, root_elem
from openind.text import parse_poly_over

from oracles import numeric


def root(text, k):
    return root_elem(parse_poly_over(text), k)


def test_root_elem_sqrt2():
    r = root("t^2 - 2", 2)
    assert cmp_root_frac(r, Frac(Z.parse("1"))) == 1
    assert cmp_root_frac(r, Frac(Z.parse("2"))) == -1


def test_root_in_model_itself():
    r = root("t^2 - x", 2)
    h = SHEP.parse("x^(1/2)")
    assert h * h == SHEP.parse("x")
    assert cmp_root_frac(r, Frac(h)) == 0


def test_no_real_roots():
    with pytest.raises(PreconditionError, match="0 real roots"):
        root("t^2 + 1", 1)


def test_index_out_of_range():
    with pytest.raises(PreconditionError, match="2 real roots"):
        root("t^2 - 2", 3)


def test_cmp_root_frac():
    assert cmp_root_frac(root("t^2 - 2", 2), Frac(Z.parse("3"), Z.parse("2"))) == -1
    assert cmp_root_frac(root("2*t - 3", 1), Frac(Z.parse("3"), Z.parse("2"))) == 0
    assert cmp_root_frac(root("t^2 - x", 2), Frac(SHEP.parse("x"))) == -1


def test_ip_root_examples():
    assert ip_root(root("t^2 - 2", 2), Z) == IPFound(Z.parse("1"))
    assert ip_root(root("t^2 - 2", 1), Z) == IPFound(Z.parse("-2"))
    assert ip_root(root("t - 5", 1), SHEP) == IPFound(SHEP.parse("5"))


def test_ip_root_worked_instance():
    r = root("t^2 - (x + 1)", 2)
    out = ip_root(r, SHEP)
    assert out == IPFound(SHEP.parse("x^(1/2)"))
    m = out.value
    # m^2 <= x + 1 < (m + 1)^2
    assert (m * m).compare(SHEP.parse("x + 1")) <= 0
    assert SHEP.parse("x + 1").compare((m + 1) * (m + 1)) < 0


def test_ip_root_zx_not_found():
    out = ip_root(root("2*t - X", 1), ZX)
    assert isinstance(out, NotFound)
    out = ip_root(root("t^2 - X", 2), ZX)
    assert isinstance(out, NotFound)


def test_ipi_examples():
    sq, two_t = parse_poly_over("t^2"), parse_poly_over("2*t")
    assert ipi_check(Z, sq, Z.parse("0"), Z.parse("10"), Z.parse("10")) == IPFound(Z.parse("3"))
    assert ipi_check(Z, two_t, Z.parse("0"), Z.parse("10"), Z.parse("7")) == IPFound(Z.parse("3"))
    out = ipi_check(SHEP, sq, SHEP.parse("0"), SHEP.parse("x"), SHEP.parse("x + 1"))
    assert out == IPFound(SHEP.parse("x^(1/2)"))


def test_ipi_antecedent_violated():
    with pytest.raises(PreconditionError, match="y < f\\(b\\)"):
        ipi_check(Z, parse_poly_over("t^2"), Z.parse("0"), Z.parse("3"), Z.parse("10"))


def test_expansion_exact():
    e = newton_puiseux_expand(parse_poly_over("t^2 - x"), 2, 0)
    assert e.value() == SHEP.parse("x^(1/2)")
    assert e.exact


def test_expansion_truncated():
    e = newton_puiseux_expand(parse_poly_over("t^2 - (x + 1)"), 2, 0)
    assert e.value() == SHEP.parse("x^(1/2)")
    assert e.value().coeff(0) == 0
    assert not e.exact
    assert e.truncation == F(-1, 2)


def test_expansion_linear():
    e = newton_puiseux_expand(parse_poly_over("t - (x + 3)"), 1, 0)
    assert e.value() == SHEP.parse("x + 3")
    assert e.exact


def test_expansion_non_real_branch():
    with pytest.raises(PreconditionError, match="selected branch is not real"):
        newton_puiseux_expand(parse_poly_over("t^2 + x"), 1, 0)


def test_expansion_tail_matches_numeric_oracle():
    # t^2 - (x + 1) at a huge x against the truncated series
    e = newton_puiseux_expand(parse_poly_over("t^2 - (x + 1)"), 2, -5)
    import mpmath
    mpmath.mp.dps = 200
    exact_value = mpmath.sqrt(mpmath.mpf(10) ** 60 + 1)
    assert abs(numeric(e.terms) - exact_value) < mpmath.mpf(10) ** -150


def test_isolating_interval_holds_one_root():
    r = root("t^2 - 2", 2)
    lo, hi = isolating_interval(r)
    assert lo is None or cmp_root_frac(r, lo) == 1
    assert hi is None or cmp_root_frac(r, hi) == -1


def test_dense_between_examples():
    assert dense_between(Z, root("t^2 - 2", 2), root("t^2 - 3", 2)) == Frac(Z.parse("3"), Z.parse("2"))
    f = dense_between(SHEP, root("t^2 - x", 2), root("t^2 - 4*x", 2))
    assert f == Frac(SHEP.parse("3*x^(1/2)"), SHEP.parse("2"))


def test_dense_between_needs_order():
    r = root("t^2 - 2", 2)
    with pytest.raises(PreconditionError):
        dense_between(Z, r, r)


def test_dense_between_zx_refuted():
    r = root("t^2 - X", 2)
    assert isinstance(dense_between(ZX, r, r.shifted(1)), NotFound)


def test_find_l_m_examples():
    assert find_l_m(Z, root("t^2 - 2", 2)) == LM(Z.parse("1"), Z.parse("1"))
    assert find_l_m(Z, root("2*t - 3", 1)) == LM(Z.parse("2"), Z.parse("3"))
    assert find_l_m(SHEP, root("t^2 - x", 2)) == LM(SHEP.one, SHEP.parse("x^(1/2)"))


def test_find_l_m_zx():
    assert find_l_m(ZX, root("2*t - X", 1)) == LM(ZX.parse("2"), ZX.parse("X"))
    assert isinstance(find_l_m(ZX, root("t^2 - X", 2)), NotFound)


def test_lemma_small_fraction():
    assert lemma_small_fraction(Z, root("2*t - 1", 1)) == Z.parse("3")
    assert lemma_small_fraction(SHEP, root("x*t - 1", 1)) == SHEP.parse("x^2")
    assert lemma_small_fraction(Z, root("2*t^2 - 1", 2)) == Z.parse("2")


def test_lemma_small_fraction_needs_positive():
    with pytest.raises(PreconditionError):
        lemma_small_fraction(Z, root("t + 1", 1))


def test_compare_roots_equal_presentations():
    a = root("t^2 - 2", 2)
    b = root("t^4 - 4", 2)
    assert compare_roots(a, b) == 0
    assert compare_roots(a, exact(Frac(Z.parse("3"), Z.parse("2")))) == -1


def test_compare_infinitely_close_roots():
    a = root("t^2 - x", 2)
    b = root("t^2 - (x + 1)", 2)
    assert compare_roots(a, b) == -1
    assert compare_roots(b, a) == 1
