from fractions import Fraction as F

import pytest

from openind.errors import InvariantError, ModelMismatch, ParseError
from openind.models import SHEP, ZX, Z, ModelContext, ModelId, discreteness_probe
from openind.puiseux import Puiseux

from oracles import numeric


def test_add_in_z():
    assert Z.add(Z.parse("3"), Z.parse("4")) == Z.parse("7")


def test_shep_exponents_add():
    h = SHEP.parse("x^(1/2)")
    assert SHEP.mul(h, h) == SHEP.parse("x")


def test_zx_variable_beats_integers():
    assert ZX.cmp(ZX.parse("X"), ZX.parse("1000000")) == 1


def test_mixed_operands_rejected():
    with pytest.raises(ModelMismatch, match="model mismatch"):
        Z.add(Z.parse("3"), SHEP.parse("x"))


def test_nonnegative():
    assert not Z.is_nonnegative(Z.parse("-1"))
    assert SHEP.is_nonnegative(SHEP.parse("root(t^2-2,2)*x^(1/2) - 1000000000"))
    assert not ZX.is_nonnegative(ZX.parse("-X + 1000000000"))


def test_leading_term_sign_matches_numeric_oracle():
    a = SHEP.parse("root(t^2-2,2)*x^(1/2) - 1000000000")
    assert numeric(a.terms) > 0


def test_discreteness_probe():
    assert discreteness_probe(Z, [Z.parse("1"), Z.parse("5")]) == (True, None)
    assert discreteness_probe(SHEP, [SHEP.parse("x^(1/2)")]) == (True, None)


def test_probe_never_sees_half_constant():
    with pytest.raises(InvariantError, match="constant term must be an integer"):
        SHEP.parse("1/2")


def test_parse_two_term_shep_element():
    a = SHEP.parse("root(t^2-2,2)*x^(1/2) + 3")
    assert len(a.terms) == 2
    assert a.coeff(0) == 3


def test_parse_zx_polynomial():
    a = ZX.parse("3*X^2 - 5*X + 7")
    assert a.degree == 2
    assert ZX.format(a) == "3*X^2 - 5*X + 7"


def test_format_parse_roundtrip():
    for text in ["x^(1/2) + 3", "1/2*x - 4", "-x^(3/2)"]:
        a = SHEP.parse(text)
        assert SHEP.parse(SHEP.format(a)) == a


def test_uppercase_outside_zx():
    with pytest.raises(ParseError):
        Z.parse("X")


def test_zx_rejects_fractional_exponent():
    with pytest.raises(InvariantError):
        ZX.parse("X^(1/2)")


def test_z_rejects_variable():
    with pytest.raises(InvariantError):
        Z.parse("x")


def test_model_ids():
    assert ModelId.parse("shepherdson") is ModelId.SHEPHERDSON
    with pytest.raises(ValueError, match="unknown model"):
        ModelId.parse("q")
    assert ModelContext.of("zx", bisection=5).limits.bisection == 5


def test_fraction_field_membership():
    assert SHEP.in_fraction_field(Puiseux([(F(-1, 2), 1)]))
    assert not ZX.in_fraction_field(Puiseux([(F(1, 2), 1)]))
    assert ZX.in_fraction_field(Puiseux([(-1, F(1, 3))]))
