"""Seeded instance families and per-theorem condition checks.

Every report lists, for each condition of an equivalence, whether it held
on all sampled instances, with witnesses for successes and certified
counterexamples for failures.  Each witness is re-verified through a code
path separate from the one that produced it before it is reported.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import limits
from .errors import ResourceCapError
from .fraction_field import DivResult, Frac, euclid_div, frac_integer_part, nat_den_integer_part
from .formulas import (EIOpenFound, InductionVerdict, check_eiopen_instance, check_induction,
                       format_formula, parse_formula)
from .models import ModelContext, ModelId
from .poly import Poly
from .puiseux import Puiseux
from .rc import (LM, IPFound, compare_roots, dense_between, find_l_m, ip_root, ipi_check)
from .results import Indeterminate, NotFound
from .roots import RootElem, exact, root_elem, roots_of


@dataclass(frozen=True)
class CheckBounds:
    max_degree: int = 4
    max_coeff: int = 20
    trials: int = 100
    seed: int = 0
    bisection: int = 10_000
    terms: int = 128
    l_bound: int = 16

    def __post_init__(self):
        for name in ("max_degree", "max_coeff", "trials", "bisection", "terms", "l_bound"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if not -(2**63) <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    def limits(self) -> limits.Limits:
        return limits.Limits(bisection=self.bisection, terms=self.terms)

    def public(self) -> dict:
        return {"max_degree": self.max_degree, "max_coeff": self.max_coeff,
                "trials": self.trials, "bisection": self.bisection,
                "terms": self.terms, "l_bound": self.l_bound}


# -- sampling -------------------------------------------------------------------

def _rng(bounds: CheckBounds, kind: str, model: ModelContext) -> random.Random:
    return random.Random(f"{bounds.seed}:{kind}:{model.id.value}")


def _big(model: ModelContext) -> Puiseux:
    """A fixed element that is odd-looking to Z[X]: X itself, or 7 in Z."""
    return Puiseux.const(7) if model.id is ModelId.Z else Puiseux.x()


def random_element(rng: random.Random, model: ModelContext, c: int, positive=False) -> Puiseux:
    """A small random element of the model."""
    if model.id is ModelId.Z:
        v = rng.randint(1 if positive else -c, c)
        return Puiseux.const(v)
    exps = [Fraction(1), Fraction(0)] if model.id is ModelId.ZX_LEX else \
        [Fraction(1), Fraction(1, 2), Fraction(0)]
    while True:
        terms = []
        for e in exps:
            if rng.random() < 0.5:
                terms.append((e, rng.randint(-c, c)))
        v = Puiseux(terms)
        if not positive or v.sign() > 0:
            return v


def random_poly(rng: random.Random, model: ModelContext, bounds: CheckBounds, max_degree=None) -> Poly:
    """A random polynomial in t over M with nonzero leading coefficient."""
    deg = rng.randint(1, max_degree or bounds.max_degree)
    while True:
        small = max(1, bounds.max_coeff // 4) if model.id is not ModelId.Z else bounds.max_coeff
        coeffs = [random_element(rng, model, small) for _ in range(deg)]
        lead = Puiseux.const(rng.randint(1, min(3, bounds.max_coeff)))
        p = Poly(coeffs + [lead])
        if p.degree == deg:
            return p


def _fixed_polys(model: ModelContext) -> list[tuple[Poly, int]]:
    y = _big(model)
    one, zero = Puiseux.const(1), Puiseux()
    return [(Poly([-y, Puiseux.const(2)]), 1),  # y/2
            (Poly([-y, zero, one]), 2)]          # sqrt(y)


def sample_roots(bounds: CheckBounds, model: ModelContext, fixed=True):
    """Roots of random polynomials over M, fixed family first."""
    if fixed:
        for p, k in _fixed_polys(model):
            yield root_elem(p, k)
    rng = _rng(bounds, "rc_roots", model)
    while True:
        p = random_poly(rng, model, bounds)
        try:
            rs = roots_of(p)
        except ResourceCapError:
            continue
        if rs:
            yield rs[rng.randrange(len(rs))]


def sample_polys(bounds: CheckBounds, model: ModelContext):
    rng = _rng(bounds, "polys_over_M", model)
    while True:
        yield random_poly(rng, model, bounds)


def sample_fractions(bounds: CheckBounds, model: ModelContext, nat_den=False):
    """``(m, n)`` with ``n > 0``; ``n`` a positive integer when nat_den."""
    yield _big(model), Puiseux.const(2)
    rng = _rng(bounds, "fractions" + ("_nat" if nat_den else ""), model)
    while True:
        m = random_element(rng, model, bounds.max_coeff)
        if nat_den or model.id is ModelId.Z:
            n = Puiseux.const(rng.randint(1, bounds.max_coeff))
        else:
            n = random_element(rng, model, max(1, bounds.max_coeff // 4), positive=True)
        yield m, n


def _atom_text(rng, bounds, kind: str, nparams: int) -> str:
    c = max(1, min(bounds.max_coeff, 9))
    y = lambda: f"y{rng.randint(1, nparams)}"
    if kind == "lplus":
        k = rng.randint(1, 3)
        lhs = " + ".join(["x"] * k)
        if rng.random() < 0.5:
            lhs += f" + {rng.randint(0, c)}"
        rhs = y() if rng.random() < 0.7 else str(rng.randint(0, c))
        return f"{lhs} {rng.choice(['<=', '<=', '='])} {rhs}"
    if kind == "linear":
        parts = [f"{rng.randint(1, 3)}*x"]
        if rng.random() < 0.5:
            parts.append(f"{y()}*x")
        if rng.random() < 0.5:
            parts.append(str(rng.randint(0, c)))
        return f"{' + '.join(parts)} {rng.choice(['<=', '<=', '='])} {y()}"
    deg = rng.randint(1, bounds.max_degree)
    parts = []
    for d in range(deg, 0, -1):
        if d == deg or rng.random() < 0.4:
            coef = rng.randint(1, 3) if d == deg else rng.randint(-c, c)
            if coef:
                mono = "*".join(["x"] * d)
                parts.append(mono if coef == 1 else f"{abs(coef)}*{mono}" if coef > 0 else None)
                if coef < 0:
                    parts[-1] = None
                    parts.append(f"0 - {abs(coef)}*{'*'.join(['x'] * d)}")
    parts = [p for p in parts if p]
    lhs = " + ".join(parts) if parts else "x"
    rhs = y() if rng.random() < 0.6 else str(rng.randint(0, c))
    return f"{lhs} {rng.choice(['<=', '<=', '='])} {rhs}"


_FIXED_FORMULAS = {"open": "x*x <= y1", "linear": "2*x <= y1", "lplus": "x + x <= y1"}


def sample_formulas(bounds: CheckBounds, model: ModelContext, kind: str):
    """``(formula, params)`` pairs; kind is open, linear or lplus."""
    yield parse_formula(_FIXED_FORMULAS[kind]), [_big(model)]
    rng = _rng(bounds, f"{kind}_formulas", model)
    while True:
        nparams = rng.randint(1, 2)
        text = _atom_text(rng, bounds, kind, nparams)
        if rng.random() < 0.3:
            other = _atom_text(rng, bounds, kind if kind != "open" else "linear", nparams)
            text = f"{text} {rng.choice(['&', '|'])} {other}"
        if rng.random() < 0.2:
            text = f"!({text})"
        f = parse_formula(text)
        params = [random_element(rng, model, bounds.max_coeff) for _ in range(nparams)]
        yield f, params


def sample_instances(bounds: CheckBounds, kind: str, model: ModelContext):
    """Deterministic stream for one of the named instance kinds."""
    if kind == "polys_over_M":
        return sample_polys(bounds, model)
    if kind == "fractions":
        return sample_fractions(bounds, model)
    if kind == "rc_roots":
        return sample_roots(bounds, model)
    if kind.endswith("_formulas"):
        return sample_formulas(bounds, model, kind[: -len("_formulas")])
    raise ValueError(f"unknown instance kind {kind!r}")


def take(stream, n: int) -> list:
    out = []
    for item in stream:
        out.append(item)
        if len(out) >= n:
            break
    return out


# -- reports -------------------------------------------------------------------

@dataclass
class Condition:
    id: str
    holds: bool | None = True
    witnesses: list[str] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)
    indeterminate: int = 0
    note: str | None = None

    def success(self, text: str):
        if len(self.witnesses) < 3:
            self.witnesses.append(text)

    def failure(self, text: str):
        self.holds = False
        if len(self.counterexamples) < 3:
            self.counterexamples.append(text)

    def undecided(self, reason: str):
        self.indeterminate += 1
        if self.holds is True:
            self.holds = None

    def to_json(self) -> dict:
        out = {"id": self.id}
        if self.holds is None:
            out["indeterminate"] = True
        else:
            out["holds"] = self.holds
        out["witnesses"] = list(self.witnesses)
        out["counterexamples"] = list(self.counterexamples)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class TheoremReport:
    theorem: str
    model: str
    seed: int
    bounds: dict
    conditions: list[Condition]
    elapsed_ms: int = 0
    disagreements: list[str] = field(default_factory=list)

    @property
    def decided(self) -> list[bool]:
        return [c.holds for c in self.conditions if c.holds is not None]

    @property
    def agreement(self) -> bool:
        d = self.decided
        return not self.disagreements and (all(d) or not any(d))

    @property
    def indeterminate_count(self) -> int:
        return sum(c.indeterminate for c in self.conditions)

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "model": self.model, "seed": self.seed,
               "bounds": self.bounds,
               "conditions": [c.to_json() for c in self.conditions],
               "agreement": self.agreement,
               "indeterminate_count": self.indeterminate_count,
               "elapsed_ms": self.elapsed_ms}
        if self.disagreements:
            out["disagreements"] = list(self.disagreements)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)


# -- independent re-verification -------------------------------------------------

class VerificationError(AssertionError):
    pass


def _verify(ok: bool, what: str):
    if not ok:
        raise VerificationError(f"re-verification failed: {what}")


def verify_ip(r: RootElem, m: Puiseux):
    """``m <= r < m + 1`` via expansion comparison."""
    _verify(compare_roots(exact(m), r) <= 0 and compare_roots(r, exact(m + 1)) < 0,
            f"integer part {m} of {r}")


def verify_div(n: Puiseux, k: Puiseux, d: DivResult):
    l = d.remainder
    _verify(d.quotient * k + l == n and l.sign() >= 0 and (k - l).sign() > 0,
            "division identity")


def verify_floor(f: Frac, m: Puiseux):
    _verify(Frac(m) <= f and f < Frac(m + 1), "fraction integer part")


def verify_between(r: RootElem, f: Frac, s: RootElem):
    fr = exact(f)
    _verify(compare_roots(r, fr) < 0 and compare_roots(fr, s) < 0, "density witness")


def verify_lm(r: RootElem, lm: LM):
    lo, hi = exact(Frac(lm.m, lm.l)), exact(Frac(lm.m + lm.l, lm.l))
    _verify(lm.l.sign() > 0 and compare_roots(lo, r) <= 0 and compare_roots(r, hi) < 0,
            "l, m witness")


def verify_ipi(f: Poly, a, b, y, x):
    _verify(a <= x < b and x.sign() >= 0 and f(x) <= y < f(x + 1), "ipi witness")


# -- condition helpers ------------------------------------------------------------

def capped(fn, *args):
    """Call ``fn``; a tripped resource cap becomes an Indeterminate."""
    try:
        return fn(*args)
    except ResourceCapError as exc:
        return Indeterminate(str(exc))


def _fmt(model: ModelContext, v) -> str:
    return model.format(v)


def _root_text(model: ModelContext, r: RootElem) -> str:
    body = r.defining.to_str("t", lambda c: c.format(model.var))
    return f"rcroot({body}, {r.index})"


def _ip_condition(cid: str, model, roots) -> Condition:
    cond = Condition(cid)
    for r in roots:
        out = capped(ip_root, r, model)
        if isinstance(out, IPFound):
            verify_ip(r, out.value)
            cond.success(f"ip({_root_text(model, r)}) = {_fmt(model, out.value)}")
        elif isinstance(out, NotFound):
            cond.failure(f"{_root_text(model, r)}: {out.certificate}")
        else:
            cond.undecided(out.reason)
    return cond


def _frac_condition(cid: str, model, fracs, nat: bool) -> Condition:
    cond = Condition(cid)
    for m, n in fracs:
        f = Frac(m, n)
        out = capped(nat_den_integer_part, model, m, int(n.constant_value())) if nat \
            else capped(frac_integer_part, model, f)
        text = f"({_fmt(model, m)})/({_fmt(model, n)})"
        if isinstance(out, NotFound):
            cond.failure(f"{text}: {out.certificate}")
        elif isinstance(out, Indeterminate):
            cond.undecided(out.reason)
        else:
            verify_floor(f, out)
            cond.success(f"ip({text}) = {_fmt(model, out)}")
    return cond


def _ipi_condition(cid: str, model, instances) -> Condition:
    cond = Condition(cid)
    for f, a, b, y in instances:
        out = capped(ipi_check, model, f, a, b, y)
        text = (f"f = {f.to_str('t', lambda c: c.format(model.var))}, a = {_fmt(model, a)}, "
                f"b = {_fmt(model, b)}, y = {_fmt(model, y)}")
        if isinstance(out, IPFound):
            verify_ipi(f, a, b, y, out.value)
            cond.success(f"{text}: x = {_fmt(model, out.value)}")
        elif isinstance(out, NotFound):
            cond.failure(f"{text}: {out.certificate}")
        else:
            cond.undecided(out.reason)
    return cond


def _induction_condition(cid: str, model, formulas) -> Condition:
    cond = Condition(cid)
    for phi, params in formulas:
        out = capped(check_induction, phi, params, model)
        text = f"{format_formula(phi)} with " + ", ".join(
            f"y{i + 1} = {_fmt(model, p)}" for i, p in enumerate(params))
        if isinstance(out, Indeterminate):
            cond.undecided(out.reason)
        elif out.holds:
            cond.success(f"{text}: {out.describe(model.var)}")
        else:
            cond.failure(f"{text}: {out.describe(model.var)}")
    return cond


def _ipi_instances(bounds, model, family: str):
    """``(f, a, b, y)`` satisfying the ipi antecedent; fixed instance first."""
    big = _big(model)
    t = lambda k: Poly([Puiseux(), Puiseux.const(k)])
    zero = Puiseux()
    if family == "poly":
        yield Poly([zero, zero, Puiseux.const(1)]), zero, big, big
    else:
        yield t(2), zero, big, big
    rng = _rng(bounds, f"ipi_{family}", model)
    while True:
        if family == "poly":
            f = random_poly(rng, model, bounds, min(bounds.max_degree, 3))
        elif family == "nat":
            f = t(rng.randint(1, bounds.max_coeff))
        else:
            f = Poly([zero, random_element(rng, model, bounds.max_coeff, positive=True)])
        a = Puiseux.const(rng.randint(0, 3))
        b = a + random_element(rng, model, bounds.max_coeff, positive=True)
        fa, fb = f(a), f(b)
        if fa.compare(fb) >= 0:
            continue
        y = fa + random_element(rng, model, bounds.max_coeff, positive=True)
        if y.compare(fb) >= 0:
            y = fa
        yield f, a, b, y


# -- theorem checks --------------------------------------------------------------

def _run(theorem: str, model: ModelContext, bounds: CheckBounds, body) -> TheoremReport:
    start = time.perf_counter()
    with limits.using(bounds.limits()):
        conds, extra = body()
    rep = TheoremReport(theorem, model.id.value, bounds.seed, bounds.public(), conds)
    rep.disagreements = extra
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


def _model(model, bounds: CheckBounds) -> ModelContext:
    return ModelContext(model.id, bounds.limits())


def check_thm1(model: ModelContext, bounds: CheckBounds) -> TheoremReport:
    model = _model(model, bounds)

    def body():
        roots = take(sample_roots(bounds, model), bounds.trials)
        c1 = _ip_condition("1", model, roots)
        c1.note = "integer parts of real-closure elements"
        c2 = _ip_condition("2", model, roots)
        c2.note = "integer parts of roots of polynomials over M"
        c3 = _ipi_condition("3", model, take(_ipi_instances(bounds, model, "poly"), bounds.trials))
        c4 = _induction_condition("4", model, take(sample_formulas(bounds, model, "open"), bounds.trials))
        return [c1, c2, c3, c4], []
    return _run("T1", model, bounds, body)


def check_thm2(model: ModelContext, bounds: CheckBounds) -> TheoremReport:
    model = _model(model, bounds)

    def body():
        fr = take(sample_fractions(bounds, model, nat_den=True), bounds.trials)
        c1 = _frac_condition("1", model, fr, nat=True)
        c2 = _frac_condition("2", model, fr, nat=True)
        c3 = _ipi_condition("3", model, take(_ipi_instances(bounds, model, "nat"), bounds.trials))
        c4 = _induction_condition("4", model, take(sample_formulas(bounds, model, "lplus"), bounds.trials))
        c4.note = "restricted (quantifier-free L+)"
        return [c1, c2, c3, c4], []
    return _run("T2", model, bounds, body)


def check_thm3(model: ModelContext, bounds: CheckBounds) -> TheoremReport:
    model = _model(model, bounds)

    def body():
        fr = take(sample_fractions(bounds, model), bounds.trials)
        c1 = _frac_condition("1", model, fr, nat=False)
        c2 = _frac_condition("2", model, fr, nat=False)
        c3 = _ipi_condition("3", model, take(_ipi_instances(bounds, model, "mul"), bounds.trials))
        cs = Condition("*3")
        for n, k in fr:
            out = capped(euclid_div, model, n, k)
            text = f"({_fmt(model, n)}, {_fmt(model, k)})"
            if isinstance(out, NotFound):
                cs.failure(f"{text}: {out.certificate}")
            elif isinstance(out, Indeterminate):
                cs.undecided(out.reason)
            else:
                verify_div(n, k, out)
                cs.success(f"{text} -> quotient {_fmt(model, out.quotient)}, "
                           f"remainder {_fmt(model, out.remainder)}")
        c4 = _induction_condition("4", model, take(sample_formulas(bounds, model, "linear"), bounds.trials))
        return [c1, c2, c3, cs, c4], []
    return _run("T3", model, bounds, body)


def _sorted_pair(r: RootElem, s: RootElem):
    c = capped(compare_roots, r, s)
    if c == 0 or isinstance(c, Indeterminate):
        return None
    return (r, s) if c < 0 else (s, r)


def check_thm4(model: ModelContext, bounds: CheckBounds) -> TheoremReport:
    model = _model(model, bounds)

    def body():
        n = bounds.trials
        roots = take(sample_roots(bounds, model), n + 1)
        c1 = Condition("1")
        pairs = []
        # the fixed roots first: sqrt(y) against sqrt(y) + 1
        sq = roots[1]
        pairs.append((sq, sq.shifted(1)))
        for r, s in zip(roots[2:], roots[3:]):
            pr = _sorted_pair(r, s)
            if pr:
                pairs.append(pr)
        for r, s in pairs[:n]:
            _density(c1, model, r, s)
        c2 = Condition("2")
        for r in roots[:n]:
            _density(c2, model, r, r.shifted(1))
        c3 = Condition("3")
        for r in roots[:n]:
            out = capped(find_l_m, model, r)
            if isinstance(out, LM):
                verify_lm(r, out)
                c3.success(f"{_root_text(model, r)}: l = {_fmt(model, out.l)}, m = {_fmt(model, out.m)}")
            elif isinstance(out, NotFound):
                c3.failure(f"{_root_text(model, r)}: {out.certificate}")
            else:
                c3.undecided(out.reason)
        c4 = Condition("4")
        c4.note = "an exhausted l search is reported as indeterminate"
        for psi, params in take(sample_formulas(bounds, model, "open"), n):
            out = capped(check_eiopen_instance, psi, params, model, bounds.l_bound)
            if isinstance(out, EIOpenFound):
                c4.success(f"{format_formula(psi)}: l = {_fmt(model, out.l)}, "
                           f"{out.verdict.describe(model.var)}")
            else:
                c4.undecided(getattr(out, "reason", "l search exhausted"))
        return [c1, c2, c3, c4], []
    return _run("T4", model, bounds, body)


def _density(cond: Condition, model, r, s):
    out = capped(dense_between, model, r, s)
    text = f"({_root_text(model, r)}, {_root_text(model, s)})"
    if isinstance(out, Frac):
        verify_between(r, out, s)
        cond.success(f"{text}: {out.format(model.var)}")
    elif isinstance(out, NotFound):
        cond.failure(f"{text}: {out.certificate}")
    else:
        cond.undecided(out.reason)


def check_corollaries(model: ModelContext, bounds: CheckBounds) -> list[TheoremReport]:
    model = _model(model, bounds)
    return [_run("COR_IOPEN_SPLIT", model, bounds, lambda: _cor_split(model, bounds)),
            _run("COR_IP_DENSITY", model, bounds, lambda: _cor_density(model, bounds))]


def _cor_split(model, bounds):
    n = bounds.trials
    lin = _induction_condition("IOpenLin", model, take(sample_formulas(bounds, model, "linear"), n))
    direct = Condition("IOpen")
    eio = Condition("eIOpen")
    eio.note = "an exhausted l search is reported as indeterminate"
    composite = Condition("IOpenLin+eIOpen")
    disagreements = []
    for phi, params in take(sample_formulas(bounds, model, "open"), n):
        text = format_formula(phi)
        v = capped(check_induction, phi, params, model)
        e = capped(check_eiopen_instance, phi, params, model, bounds.l_bound)
        if isinstance(v, Indeterminate):
            direct.undecided(v.reason)
        elif v.holds:
            direct.success(f"{text}: {v.describe(model.var)}")
        else:
            direct.failure(f"{text}: {v.describe(model.var)}")
        if isinstance(e, EIOpenFound):
            eio.success(f"{text}: l = {_fmt(model, e.l)}")
        else:
            eio.undecided("l search exhausted")
        # an instance failing directly while both halves hold would
        # contradict the split; failures must be localized in a half
        if isinstance(v, InductionVerdict) and not v.holds:
            if lin.holds is True and isinstance(e, EIOpenFound):
                disagreements.append(f"{text}: direct induction fails but both halves hold")
    composite.holds = _and(lin.holds, eio.holds)
    if lin.holds is False:
        composite.counterexamples = list(lin.counterexamples)
    return [direct, lin, eio, composite], disagreements


def _and(a, b):
    if a is False or b is False:
        return False
    if a is None or b is None:
        return None
    return True


def _cor_density(model, bounds):
    """Integer parts of roots against integer parts of fractions plus density."""
    n = bounds.trials
    left = Condition("IP(RC)")
    right = Condition("IP(FF)+density")
    disagreements = []
    for r in take(sample_roots(bounds, model), n):
        text = _root_text(model, r)
        a = capped(ip_root, r, model)
        b = capped(_ip_via_density, model, r)
        for cond, out in ((left, a), (right, b)):
            if isinstance(out, IPFound):
                cond.success(f"{text}: {_fmt(model, out.value)}")
            elif isinstance(out, NotFound):
                cond.failure(f"{text}: {out.certificate}")
            else:
                cond.undecided(out.reason)
        if isinstance(a, (IPFound, NotFound)) and isinstance(b, (IPFound, NotFound)):
            if isinstance(a, IPFound) != isinstance(b, IPFound) or (
                    isinstance(a, IPFound) and a.value != b.value):
                disagreements.append(f"{text}: direct and composite integer parts differ")
    return [left, right], disagreements


def _ip_via_density(model, r: RootElem):
    """Integer part of ``r`` from a fraction in (r, r + 1) and its integer part."""
    from .roots import cmp_root_frac

    f = dense_between(model, r, r.shifted(1))
    if not isinstance(f, Frac):
        return f
    g = f - 1  # r - 1 < g < r
    k = frac_integer_part(model, g)
    if isinstance(k, NotFound):
        return k
    cand = k + 1
    return IPFound(cand if cmp_root_frac(r, Frac(cand)) >= 0 else k)


THEOREMS = {"t1": check_thm1, "t2": check_thm2, "t3": check_thm3, "t4": check_thm4}

# expected truth of every condition per model
EXPECTED = {ModelId.Z: True, ModelId.SHEPHERDSON: True, ModelId.ZX_LEX: False}
