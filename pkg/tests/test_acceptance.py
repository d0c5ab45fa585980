"""Acceptance criteria at their stated sizes and tolerances."""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction as F

from openind.formulas import EIOpenFound, check_eiopen_instance, check_induction, parse_formula
from openind.fraction_field import Frac, euclid_div
from openind.harness import (CheckBounds, VerificationError, capped, check_corollaries, check_thm1,
                             check_thm3, sample_formulas, sample_roots, take, verify_between, verify_ip,
                             verify_lm)
from openind.models import SHEP, ZX, Z
from openind.poly import Poly
from openind.rc import LM, IPFound, dense_between, find_l_m, ip_root, lemma_small_fraction
from openind.realalg import Interval, RealAlg, cauchy_bound, count_real_roots, ra_floor
from openind.results import Indeterminate, NotFound
from openind.roots import cmp_root_frac, root_elem
from openind.text import parse_poly_over

from oracles import count_roots


def P(cs):
    return Poly(F(c) for c in cs)


def _rational_polys(rng, n):
    out = []
    while len(out) < n:
        cs = [rng.randint(-20, 20) for _ in range(rng.randint(2, 7))]
        if cs[-1]:
            out.append(cs)
    return out


def test_1_sturm_matches_subdivision_oracle(verdict):
    polys = _rational_polys(random.Random(1), 500)
    t = time.perf_counter()
    ours = []
    for cs in polys:
        b = cauchy_bound(P(cs))
        ours.append(count_real_roots(P(cs), Interval(-b, b, True, False)))
    elapsed = time.perf_counter() - t
    bad = [cs for cs, n in zip(polys, ours)
           if n != count_roots(cs, -cauchy_bound(P(cs)), cauchy_bound(P(cs)))]
    verdict(1, not bad and elapsed < 60,
            f"{500 - len(bad)}/500 counts match the oracle, {elapsed:.1f} s")


def _random_realalgs(rng, n):
    vals = []
    while len(vals) < n:
        cs = [rng.randint(-20, 20) for _ in range(rng.randint(3, 5))]
        if not cs[-1]:
            continue
        k = count_real_roots(P(cs))
        if not k:
            continue
        v = RealAlg.root(P(cs), rng.randint(1, k))
        if rng.random() < 0.3:
            v = v * F(rng.randint(-9, 9), rng.randint(1, 9)) + rng.randint(-30, 30)
        vals.append(v)
    return vals


def test_2_real_algebraic_identities(verdict):
    s2 = RealAlg.root(P([-2, 0, 1]), 2)
    s3 = RealAlg.root(P([-3, 0, 1]), 2)
    s6 = RealAlg.root(P([-6, 0, 1]), 2)
    ids = [s2 * s2 == 2, (s2 * s3).compare(s6) == 0, s2 + (-s2) == 0]
    bad = 0
    for v in _random_realalgs(random.Random(2), 200):
        fl = ra_floor(v)
        # r - 1 < floor <= r, compared exactly
        if not (fl <= v and v < fl + 1):
            bad += 1
    verdict(2, all(ids) and bad == 0,
            f"identities {sum(ids)}/3, floor exact on {200 - bad}/200 values")


def test_3_thm3_on_z(verdict):
    t = time.perf_counter()
    rep = check_thm3(Z, CheckBounds())
    elapsed = time.perf_counter() - t
    ok = (len(rep.conditions) == 5 and all(c.holds is True for c in rep.conditions)
          and rep.indeterminate_count == 0 and rep.agreement and elapsed < 120)
    verdict(3, ok, f"{[c.holds for c in rep.conditions]}, agreement {rep.agreement}, "
                   f"{rep.indeterminate_count} indeterminate, {elapsed:.1f} s")


def test_4_zx_negative_control(verdict):
    div = euclid_div(ZX, ZX.parse("X"), ZX.parse("2"))
    v = check_induction(parse_formula("x + x <= y1"), [ZX.parse("X")], ZX)
    cert = dict(v.certificate)
    rep = check_thm3(ZX, CheckBounds())
    ok = (isinstance(div, NotFound) and bool(div.certificate)
          and not v.holds and set(cert) == {"base", "step", "counterexample"}
          and cert["counterexample"] == "phi fails at b = X"
          and len(rep.conditions) == 5 and all(c.holds is False for c in rep.conditions)
          and rep.agreement)
    verdict(4, ok, f"euclid {type(div).__name__}, induction certificate {sorted(cert)}, "
                   f"thm3 {[c.holds for c in rep.conditions]}, agreement {rep.agreement}")


def test_5_shepherdson_thm1(verdict):
    bounds = CheckBounds(max_degree=3)
    found = missing = undecided = 0
    for r in take(sample_roots(bounds, SHEP), 100):
        out = capped(ip_root, r, SHEP)
        if isinstance(out, IPFound):
            try:
                verify_ip(r, out.value)
                found += 1
            except VerificationError:
                pass
        elif isinstance(out, NotFound):
            missing += 1
        else:
            undecided += 1
    rep = check_thm1(SHEP, bounds)
    decided_agree = rep.agreement and all(c.holds in (True, None) for c in rep.conditions)
    worked = ip_root(root_elem(parse_poly_over("t^2 - (x + 1)"), 2), SHEP)
    regression = worked == IPFound(SHEP.parse("x^(1/2)"))
    ok = found >= 95 and missing == 0 and decided_agree and regression
    verdict(5, ok, f"ip_root certified {found}/100 ({undecided} indeterminate, {missing} not found), "
                   f"thm1 agreement {decided_agree}, worked instance {regression}")


def _certified_lm(model, roots):
    good = 0
    for r in roots:
        out = capped(find_l_m, model, r)
        if isinstance(out, LM):
            try:
                verify_lm(r, out)
                good += 1
            except VerificationError:
                pass
    return good


def test_6_thm4_witnesses(verdict):
    z_ok = _certified_lm(Z, take(sample_roots(CheckBounds(seed=6), Z), 50))
    s_ok = _certified_lm(SHEP, take(sample_roots(CheckBounds(seed=6, max_degree=3), SHEP), 20))
    s2 = root_elem(parse_poly_over("t^2 - 2"), 2)
    s3 = root_elem(parse_poly_over("t^2 - 3"), 2)
    f = dense_between(Z, s2, s3)
    try:
        verify_between(s2, f, s3)
        dense_ok = True
    except (VerificationError, TypeError):
        dense_ok = False
    r = root_elem(parse_poly_over("x*t - 1"), 1)
    m = lemma_small_fraction(SHEP, r)
    small_ok = m == SHEP.parse("x^2") and cmp_root_frac(r, Frac(SHEP.one, m)) > 0
    ok = z_ok == 50 and s_ok == 20 and dense_ok and small_ok
    verdict(6, ok, f"find_l_m certified {z_ok}/50 over Z and {s_ok}/20 over SHEP, "
                   f"density {dense_ok}, small fraction {SHEP.format(m)}")


def test_7_eiopen_never_exhausted(verdict):
    found = exhausted = 0
    for psi, params in take(sample_formulas(CheckBounds(seed=7), Z, "open"), 100):
        out = capped(check_eiopen_instance, psi, params, Z, 16)
        if isinstance(out, EIOpenFound) and out.verdict.holds:
            found += 1
        elif not isinstance(out, Indeterminate):
            exhausted += 1
    verdict(7, found == 100 and exhausted == 0, f"l found for {found}/100, {exhausted} exhausted")


def test_8_corollary_consistency(verdict):
    z = check_corollaries(Z, CheckBounds())
    s = check_corollaries(SHEP, CheckBounds())
    clean = all(not r.disagreements and r.agreement for r in z + s)
    split, density = check_corollaries(ZX, CheckBounds())
    conds = {c.id: c for c in split.conditions}
    # failure must sit in a named half, and the composite must follow it
    localized = (conds["IOpen"].holds is False and conds["IOpenLin"].holds is False
                 and conds["IOpenLin+eIOpen"].holds is False
                 and bool(conds["IOpenLin+eIOpen"].counterexamples)
                 and all(c.holds is False for c in density.conditions)
                 and not split.disagreements and not density.disagreements)
    verdict(8, clean and localized,
            f"Z/SHEP disagreements {sum(len(r.disagreements) for r in z + s)}, "
            f"ZX localized {localized}")


def _theorem_json():
    out = subprocess.run([sys.executable, "-m", "openind.cli", "theorem", "t3", "--model", "z",
                          "--seed", "7", "--json"], capture_output=True, text=True, check=False)
    data = json.loads(out.stdout)
    data.pop("elapsed_ms")
    return out.returncode, data


def test_9_cli_determinism(verdict):
    (c1, a), (c2, b) = _theorem_json(), _theorem_json()
    verdict(9, a == b and c1 == c2 == 0, f"reports identical {a == b}, exit codes {c1}, {c2}")
