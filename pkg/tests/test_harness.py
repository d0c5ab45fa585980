import pytest

from openind.formulas import classify
from openind.harness import (EXPECTED, CheckBounds, Condition, TheoremReport, check_thm1, check_thm3,
                             check_thm4, sample_instances, take)
from openind.models import SHEP, ZX, Z


def test_polys_are_deterministic():
    b = CheckBounds(seed=42, max_degree=2)
    first = [str(p) for p in take(sample_instances(b, "polys_over_M", Z), 5)]
    again = [str(p) for p in take(sample_instances(b, "polys_over_M", Z), 5)]
    assert first == again
    assert all(p.degree <= 2 for p in take(sample_instances(b, "polys_over_M", Z), 5))


def test_seed_changes_stream():
    a = take(sample_instances(CheckBounds(seed=1), "polys_over_M", Z), 5)
    b = take(sample_instances(CheckBounds(seed=2), "polys_over_M", Z), 5)
    assert [str(p) for p in a] != [str(p) for p in b]


@pytest.mark.parametrize("model", [Z, ZX, SHEP])
def test_linear_formulas_classify_linear(model):
    b = CheckBounds(seed=42)
    for f, _ in take(sample_instances(b, "linear_formulas", model), 40):
        assert classify(f).linear


def test_lplus_formulas_classify_lplus():
    for f, _ in take(sample_instances(CheckBounds(seed=42), "lplus_formulas", Z), 40):
        assert classify(f).lplus


@pytest.mark.parametrize("field", ["trials", "max_degree", "bisection", "l_bound"])
def test_bounds_reject_zero(field):
    with pytest.raises(ValueError, match=field):
        CheckBounds(**{field: 0})


def test_unknown_kind():
    with pytest.raises(ValueError):
        sample_instances(CheckBounds(), "nonsense", Z)


def test_agreement_rules():
    conds = [Condition("1"), Condition("2", holds=False)]
    assert not TheoremReport("T", "z", 0, {}, conds).agreement
    conds = [Condition("1", holds=False), Condition("2", holds=None)]
    assert TheoremReport("T", "z", 0, {}, conds).agreement
    rep = TheoremReport("T", "z", 0, {}, [Condition("1")], disagreements=["x"])
    assert not rep.agreement


def test_indeterminate_serialization():
    c = Condition("4")
    c.undecided("cap")
    assert c.to_json()["indeterminate"] is True and "holds" not in c.to_json()


def _outcomes(rep):
    return {c.holds for c in rep.conditions}


def test_thm3_on_z_small():
    rep = check_thm3(Z, CheckBounds(trials=10, seed=3))
    assert [c.id for c in rep.conditions] == ["1", "2", "3", "*3", "4"]
    assert _outcomes(rep) == {EXPECTED[Z.id]} and rep.agreement


def test_thm3_on_zx_small():
    rep = check_thm3(ZX, CheckBounds(trials=10, seed=3))
    assert _outcomes(rep) == {False} and rep.agreement
    assert all(c.counterexamples for c in rep.conditions)


def test_thm1_on_shep_small():
    rep = check_thm1(SHEP, CheckBounds(trials=8, max_degree=2, seed=5))
    assert _outcomes(rep) <= {True, None} and rep.agreement


def test_thm4_on_z_small():
    rep = check_thm4(Z, CheckBounds(trials=8, seed=5))
    assert _outcomes(rep) == {True} and rep.agreement


def test_report_json_schema():
    data = check_thm3(Z, CheckBounds(trials=5)).to_json()
    assert set(data) >= {"theorem", "model", "seed", "bounds", "conditions", "agreement",
                         "indeterminate_count", "elapsed_ms"}
    for c in data["conditions"]:
        assert {"id", "witnesses", "counterexamples"} <= set(c)
        assert ("holds" in c) != ("indeterminate" in c)
