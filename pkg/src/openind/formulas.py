"""Quantifier-free formulas over ``0, 1, +, -, *, <=, =``.

Grammar::

    formula := conj ('|' conj)*
    conj    := unary ('&' unary)*
    unary   := '!' unary | '(' formula ')' | atom
    atom    := expr ('<=' | '=') expr
    expr    := ['-'] prod (('+'|'-') prod)*
    prod    := factor ('*' factor)*
    factor  := number | 'x' | 'y1'..'y9' | '(' expr ')'

``x`` is the induction variable and ``y1``..``y9`` are parameters.  Integer
literals abbreviate ``1 + ... + 1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .fraction_field import Frac
from .poly import Poly
from .puiseux import Puiseux
from .results import Indeterminate, NotFound


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    """A ring element embedded by the checkers; not produced by the parser."""

    value: Puiseux


@dataclass(frozen=True)
class BinOp:
    op: str  # + - *
    left: object
    right: object


@dataclass(frozen=True)
class Atom:
    rel: str  # <= or =
    left: object
    right: object


@dataclass(frozen=True)
class Not:
    arg: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


Term = Num | Var | Lit | BinOp
Formula = Atom | Not | And | Or


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x|y[1-9])|(<=|[-+*=&|!()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int
    index: int


def _tokenize(text: str) -> list[_Tok]:
    out, pos = [], 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, len(out) + 1)
        kind = ("num", "var", "op")[m.lastindex - 1]
        out.append(_Tok(kind, m.group(m.lastindex), m.start(m.lastindex), len(out) + 1))
        pos = m.end()
    out.append(_Tok("end", "", len(text), len(out) + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, msg: str):
        t = self.tok
        raise ParseError(msg, t.pos, t.index)

    def eat(self, text: str):
        if self.tok.text != text:
            self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        self.i += 1

    def formula(self):
        acc = self.conj()
        while self.tok.text == "|":
            self.i += 1
            acc = Or(acc, self.conj())
        return acc

    def conj(self):
        acc = self.unary()
        while self.tok.text == "&":
            self.i += 1
            acc = And(acc, self.unary())
        return acc

    def unary(self):
        if self.tok.text == "!":
            self.i += 1
            return Not(self.unary())
        if self.tok.text == "(":
            # either a parenthesized formula or the start of a term
            save = self.i
            try:
                return self.atom()
            except ParseError as term_err:
                self.i = save + 1
                try:
                    inner = self.formula()
                    self.eat(")")
                    return inner
                except ParseError:
                    raise term_err from None
        return self.atom()

    def atom(self):
        left = self.expr()
        if self.tok.text not in ("<=", "="):
            self.fail(f"expected '<=' or '=', found {self.tok.text or 'end of input'!r}")
        rel = self.tok.text
        self.i += 1
        return Atom(rel, left, self.expr())

    def expr(self):
        if self.tok.text == "-":
            self.i += 1
            acc = BinOp("-", Num(0), self.prod())
        else:
            acc = self.prod()
        while self.tok.text in ("+", "-"):
            op = self.tok.text
            self.i += 1
            acc = BinOp(op, acc, self.prod())
        return acc

    def prod(self):
        acc = self.factor()
        while self.tok.text == "*":
            self.i += 1
            acc = BinOp("*", acc, self.factor())
        return acc

    def factor(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return Num(int(t.text))
        if t.kind == "var":
            self.i += 1
            return Var(t.text)
        if t.text == "(":
            self.i += 1
            inner = self.expr()
            self.eat(")")
            return inner
        self.fail(f"unexpected {t.text or 'end of input'!r}")


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "end":
        p.fail(f"unexpected {p.tok.text!r}")
    return f


# -- formatting ---------------------------------------------------------------

def format_term(t, prec: int = 0) -> str:
    if isinstance(t, Num):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lit):
        return f"[{t.value.format()}]"
    if t.op == "*":
        s = f"{format_term(t.left, 2)}*{format_term(t.right, 3)}"
        return f"({s})" if prec > 2 else s
    s = f"{format_term(t.left, 1)} {t.op} {format_term(t.right, 2)}"
    return f"({s})" if prec > 1 else s


def format_formula(f, prec: int = 0) -> str:
    if isinstance(f, Atom):
        return f"{format_term(f.left)} {f.rel} {format_term(f.right)}"
    if isinstance(f, Not):
        return f"!({format_formula(f.arg)})"
    if isinstance(f, And):
        s = f"{format_formula(f.left, 1)} & {format_formula(f.right, 2)}"
        return f"({s})" if prec > 1 else s
    s = f"{format_formula(f.left, 0)} | {format_formula(f.right, 1)}"
    return f"({s})" if prec > 0 else s


# -- structure ----------------------------------------------------------------

def _terms(f):
    if isinstance(f, Atom):
        yield f.left
        yield f.right
    elif isinstance(f, Not):
        yield from _terms(f.arg)
    else:
        yield from _terms(f.left)
        yield from _terms(f.right)


def _subterms(t):
    yield t
    if isinstance(t, BinOp):
        yield from _subterms(t.left)
        yield from _subterms(t.right)


def _has_var(t) -> bool:
    return any(isinstance(s, Var) for s in _subterms(t))


def params_used(f) -> int:
    """Highest parameter index occurring in ``f``."""
    n = 0
    for t in _terms(f):
        for s in _subterms(t):
            if isinstance(s, Var) and s.name != "x":
                n = max(n, int(s.name[1:]))
    return n


@dataclass(frozen=True)
class Classification:
    open: bool
    linear: bool
    lplus: bool


def classify(f) -> Classification:
    """Every product needs a parameter (or a variable-free literal) as a factor
    to be linear; lplus formulas have no products at all."""
    products = [s for t in _terms(f) for s in _subterms(t)
                if isinstance(s, BinOp) and s.op == "*"]

    def ok(side):
        return (isinstance(side, Var) and side.name != "x") or not _has_var(side)

    linear = all(ok(p.left) or ok(p.right) for p in products)
    return Classification(True, linear, not products)


# -- evaluation ---------------------------------------------------------------

def _check_params(f, params) -> None:
    need = params_used(f)
    if len(params) < need:
        raise PreconditionError(f"formula uses y{need} but {len(params)} parameters were given")


def eval_term(t, x: Frac, params) -> Frac:
    if isinstance(t, Num):
        return Frac(t.value)
    if isinstance(t, Lit):
        return Frac(t.value)
    if isinstance(t, Var):
        return x if t.name == "x" else Frac(params[int(t.name[1:]) - 1])
    a, b = eval_term(t.left, x, params), eval_term(t.right, x, params)
    return a + b if t.op == "+" else a - b if t.op == "-" else a * b


def evaluate(f, x_value, params, model=None) -> bool:
    """Truth of ``f`` at ``x = x_value`` (a ring element or fraction)."""
    _check_params(f, params)
    if model is not None:
        model.check(*params)
    return _eval(f, Frac.lift(x_value), params)


def _eval(f, x: Frac, params) -> bool:
    if isinstance(f, Atom):
        d = (eval_term(f.right, x, params) - eval_term(f.left, x, params)).sign()
        return d >= 0 if f.rel == "<=" else d == 0
    if isinstance(f, Not):
        return not _eval(f.arg, x, params)
    if isinstance(f, And):
        return _eval(f.left, x, params) and _eval(f.right, x, params)
    return _eval(f.left, x, params) or _eval(f.right, x, params)


# -- compilation to atom polynomials ------------------------------------------

def term_poly(t, params) -> Poly:
    """A term as a polynomial in x over the Puiseux ring."""
    if isinstance(t, Num):
        return Poly([Puiseux.const(t.value)])
    if isinstance(t, Lit):
        return Poly([t.value])
    if isinstance(t, Var):
        if t.name == "x":
            return Poly([Puiseux(), Puiseux.const(1)])
        return Poly([Puiseux.lift(params[int(t.name[1:]) - 1])])
    a, b = term_poly(t.left, params), term_poly(t.right, params)
    return a + b if t.op == "+" else a - b if t.op == "-" else a * b


@dataclass(frozen=True)
class System:
    """A boolean tree over atoms ``p(x) >= 0`` (kind 'ge') or ``p(x) = 0``."""

    tree: tuple
    atoms: tuple[tuple[Poly, str], ...]

    def truth(self, signs) -> bool:
        return _tree_truth(self.tree, self.atoms, signs)

    def map_atoms(self, fn) -> "System":
        return System(self.tree, tuple((fn(p), k) for p, k in self.atoms))

    def negate(self) -> "System":
        return System(("not", self.tree), self.atoms)

    def conj(self, other: "System") -> "System":
        shift = len(self.atoms)
        return System(("and", self.tree, _reindex(other.tree, shift)), self.atoms + other.atoms)

    def shifted(self, c) -> "System":
        """The system at ``x + c``."""
        return self.map_atoms(lambda p: p.shift(Puiseux.lift(c)))

    def scaled(self, l) -> "System":
        """The system at ``x / l`` for ``l > 0``, cleared by ``l**deg``."""
        l = Puiseux.lift(l)

        def clear(p: Poly) -> Poly:
            d = p.degree
            return Poly(c * l ** (d - i) for i, c in enumerate(p.coeffs))
        return self.map_atoms(clear)

    def eval_at(self, v) -> bool:
        from .roots import sign_at

        f = Frac.lift(v)
        return self.truth([sign_at(p, f) for p, _ in self.atoms])


def _reindex(tree, shift):
    if tree[0] == "atom":
        return ("atom", tree[1] + shift)
    if tree[0] == "const":
        return tree
    return (tree[0],) + tuple(_reindex(t, shift) for t in tree[1:])


def _tree_truth(tree, atoms, signs) -> bool:
    kind = tree[0]
    if kind == "atom":
        s = signs[tree[1]]
        return s >= 0 if atoms[tree[1]][1] == "ge" else s == 0
    if kind == "const":
        return tree[1]
    if kind == "not":
        return not _tree_truth(tree[1], atoms, signs)
    if kind == "and":
        return _tree_truth(tree[1], atoms, signs) and _tree_truth(tree[2], atoms, signs)
    return _tree_truth(tree[1], atoms, signs) or _tree_truth(tree[2], atoms, signs)


def compile_formula(f, params) -> System:
    _check_params(f, params)
    atoms: list = []

    def go(g):
        if isinstance(g, Atom):
            atoms.append((term_poly(g.right, params) - term_poly(g.left, params),
                          "ge" if g.rel == "<=" else "eq"))
            return ("atom", len(atoms) - 1)
        if isinstance(g, Not):
            return ("not", go(g.arg))
        return ("and" if isinstance(g, And) else "or", go(g.left), go(g.right))
    tree = go(f)
    return System(tree, tuple(atoms))


def bound_system(l) -> System:
    """``x < l`` as a one-atom system."""
    # x < l  <=>  not (l - x <= 0)  <=>  not (x - l >= 0)
    p = Poly([-Puiseux.lift(l), Puiseux.const(1)])
    return System(("not", ("atom", 0)), ((p, "ge"),))


# -- truth pieces over the nonnegative part ----------------------------------

@dataclass(frozen=True)
class Piece:
    """A maximal-or-finer interval of constant truth inside ``[0, oo)``.

    Endpoints are roots (``hi`` None means infinity); a point piece has
    ``lo is hi``.  ``sample`` is an interior ring element for open pieces.
    """

    lo: object
    hi: object
    lo_closed: bool
    hi_closed: bool
    truth: bool
    sample: Puiseux | None = None

    @property
    def is_point(self) -> bool:
        return self.lo is self.hi

    def format(self, var: str = "x") -> str:
        def end(r):
            if r is None:
                return "oo"
            return _root_text(r, var)
        if self.is_point:
            return f"[{end(self.lo)}] {str(self.truth).lower()}"
        lb = "[" if self.lo_closed else "("
        rb = "]" if self.hi_closed else ")"
        return f"{lb}{end(self.lo)}, {end(self.hi)}{rb} {str(self.truth).lower()}"


def _root_text(r, var: str) -> str:
    p = r.defining
    if p.degree == 1:
        return Frac(-p.coeffs[0], p.coeffs[1]).format(var)
    body = p.to_str("t", lambda c: c.format(var))
    return f"rcroot({body}, {r.index})"


def pieces(system: System) -> list[Piece]:
    from functools import cmp_to_key

    from .rc import above, compare_roots, p_between
    from .roots import cmp_root_frac, exact, roots_of, sign_at

    zero = exact(0)
    tagged = []
    for k, (p, _) in enumerate(system.atoms):
        if p.degree >= 1:
            for r in roots_of(p):
                if cmp_root_frac(r, Frac(0)) >= 0:
                    tagged.append((r, k))
    tagged.sort(key=cmp_to_key(lambda a, b: compare_roots(a[0], b[0])))
    groups: list[tuple[object, set]] = []
    for r, k in tagged:
        if groups and compare_roots(groups[-1][0], r) == 0:
            groups[-1][1].add(k)
        else:
            groups.append((r, {k}))

    def signs_at(v):
        f = Frac(v)
        return [sign_at(p, f) for p, _ in system.atoms]

    out: list[Piece] = []
    if not groups:
        return [Piece(zero, None, True, False, system.truth(signs_at(Puiseux())), Puiseux())]
    starts_at_zero = cmp_root_frac(groups[0][0], Frac(0)) == 0
    if not starts_at_zero:
        out.append(Piece(zero, groups[0][0], True, False,
                         system.truth(signs_at(Puiseux())), Puiseux()))
    for j, (r, vanish) in enumerate(groups):
        nxt = groups[j + 1][0] if j + 1 < len(groups) else None
        sample = p_between(r, nxt) if nxt is not None else above(r)
        right = signs_at(sample)
        at = [0 if k in vanish else s for k, s in enumerate(right)]
        out.append(Piece(r, r, True, True, system.truth(at)))
        out.append(Piece(r, nxt, False, False, system.truth(right), sample))
    return out


def merge_pieces(ps: list[Piece]) -> list[Piece]:
    out: list[Piece] = []
    for p in ps:
        if out and out[-1].truth == p.truth:
            q = out[-1]
            out[-1] = Piece(q.lo, p.hi, q.lo_closed, p.hi_closed, q.truth, q.sample or p.sample)
        else:
            out.append(p)
    return out


def truth_intervals(f, params, model) -> list[Piece]:
    """Maximal intervals of constant truth of ``f`` over ``[0, oo)``."""
    model.check(*params)
    return merge_pieces(pieces(compile_formula(f, params)))


def find_point(system: System, model, truth: bool = True):
    """A model element in ``[0, oo)`` where ``system`` has the given truth
    value: a Puiseux value, NotFound or Indeterminate.

    Scans maximal runs left to right; inside a run the closed right
    endpoint wins when it lies in the model, else the first point found.
    """
    runs: list[list[Piece]] = []
    prev = None
    for pc in pieces(system):
        if pc.truth == truth:
            if prev is not None and prev.truth == truth:
                runs[-1].append(pc)
            else:
                runs.append([pc])
        prev = pc
    reasons = []
    undecided = None
    for run in runs:
        order = run[-1:] + run[:-1] if run[-1].is_point else run
        for pc in order:
            out = _piece_point(pc, model)
            if isinstance(out, Puiseux):
                return out
            if isinstance(out, Indeterminate):
                undecided = out
            else:
                reasons.append(out)
    if undecided is not None:
        return undecided
    return NotFound("; ".join(reasons) if reasons else "no interval has that truth value")


def _piece_point(pc: Piece, model):
    """A model element in the piece, an Indeterminate, or a reason string."""
    from .rc import IPFound, ip_root, model_point
    from .roots import cmp_root_frac

    if pc.is_point:
        ip = ip_root(pc.lo, model)
        if isinstance(ip, Indeterminate):
            return ip
        if isinstance(ip, IPFound) and cmp_root_frac(pc.lo, Frac(ip.value)) == 0:
            return ip.value
        return f"{pc.format(model.var)}: endpoint not in the model"
    out = model_point(model, pc.lo, pc.hi, pc.lo_closed)
    if isinstance(out, (Puiseux, Indeterminate)):
        return out
    return f"{pc.format(model.var)}: {out.certificate}"


# -- induction instances ------------------------------------------------------

@dataclass(frozen=True)
class InductionVerdict:
    """``holds`` with a reason, or a failure certificate.

    reason: 'base-fails', 'step-fails' or 'conclusion-holds' when the axiom
    instance holds; None when it fails, in which case ``certificate`` has
    the verified base, step and counterexample.
    """

    holds: bool
    reason: str | None
    witness: Puiseux | None = None
    certificate: tuple[tuple[str, str], ...] = ()

    def describe(self, var: str = "x") -> str:
        if self.holds:
            w = "" if self.witness is None else f" at {self.witness.format(var)}"
            return f"axiom holds ({self.reason}{w})"
        return "axiom fails: " + "; ".join(f"{k}: {v}" for k, v in self.certificate)


def _induct(system: System, l: Puiseux, model, check):
    """Decide ``(base & step) -> conclusion`` for stride ``l`` over ``[0, oo)``.

    ``check(v)`` evaluates the formula at ``v`` through the AST, an
    independent path used to certify every witness.
    """
    from .results import Indeterminate, NotFound

    var = model.var
    undecided = []
    # base
    if l == 1:
        base_ok = check(Puiseux())
        if not base_ok:
            return InductionVerdict(True, "base-fails", Puiseux())
        base_text = "phi(0) holds"
    else:
        u = find_point(system.negate().conj(bound_system(l)), model)
        if isinstance(u, Puiseux):
            if check(u) or u.sign() < 0 or u.compare(l) >= 0:
                raise AssertionError("base witness certification failed")
            return InductionVerdict(True, "base-fails", u)
        if isinstance(u, Indeterminate):
            undecided.append(u.reason)
        base_text = f"phi(u) holds for all u in [0, {l.format(var)})"
    # step
    v = find_point(system.conj(system.shifted(l).negate()), model)
    if isinstance(v, Puiseux):
        if not check(v) or check(v + l) or v.sign() < 0:
            raise AssertionError("step witness certification failed")
        return InductionVerdict(True, "step-fails", v)
    if isinstance(v, Indeterminate):
        undecided.append(v.reason)
    step_text = ("no v >= 0 with phi(v) and not phi(v + " + l.format(var) + ")"
                 + ("" if not isinstance(v, NotFound) else f" [{v.certificate}]"))
    # conclusion
    b = find_point(system, model, truth=False)
    if isinstance(b, NotFound):
        return InductionVerdict(True, "conclusion-holds")
    if isinstance(b, Indeterminate) or undecided:
        return Indeterminate("; ".join(undecided + ([b.reason] if isinstance(b, Indeterminate) else [])))
    if check(b) or b.sign() < 0:
        raise AssertionError("counterexample certification failed")
    return InductionVerdict(False, None, None, (
        ("base", base_text), ("step", step_text),
        ("counterexample", f"phi fails at b = {b.format(var)}")))


def check_induction(f, params, model):
    """The instance of the induction scheme for ``f`` in ``x`` over M+."""
    model.check(*params)
    system = compile_formula(f, params)
    return _induct(system, Puiseux.const(1), model,
                   lambda v: evaluate(f, v, params))


def check_l_induction(f, l, params, model):
    """Induction with base ``[0, l)`` and stride ``l``."""
    l = Puiseux.lift(l)
    model.check(l, *params)
    if l.sign() <= 0:
        raise PreconditionError("l must be positive")
    system = compile_formula(f, params)
    return _induct(system, l, model, lambda v: evaluate(f, v, params))


@dataclass(frozen=True)
class EIOpenFound:
    l: Puiseux
    verdict: InductionVerdict


@dataclass(frozen=True)
class Exhausted:
    """No candidate ``l`` worked; this is not a refutation."""

    tried: tuple[Puiseux, ...]
    undecided: int = 0

    def __bool__(self):
        return False


def _harvest_l(system: System, model) -> list[Puiseux]:
    from .rc import LM, find_l_m
    from .roots import roots_of

    out = []
    for p, _ in system.atoms:
        if p.degree < 1:
            continue
        for r in roots_of(p):
            lm = find_l_m(model, r)
            if isinstance(lm, LM):
                out.append(lm.l)
    return out


def check_eiopen_instance(psi, params, model, l_bound: int):
    """Search ``l > 0`` with ``I_l x psi(x/l)``; Found or Exhausted."""
    from .results import Indeterminate

    if l_bound < 1:
        raise PreconditionError("l_bound must be at least 1")
    model.check(*params)
    base = compile_formula(psi, params)
    cands = [Puiseux.const(k) for k in range(1, l_bound + 1)]
    for l in _harvest_l(base, model):
        if l.sign() > 0 and all(l != c for c in cands):
            cands.append(l)
    tried, undecided = [], 0
    for l in cands:
        verdict = _induct(base.scaled(l), l, model,
                          lambda v, l=l: evaluate(psi, Frac(v, l), params))
        tried.append(l)
        if isinstance(verdict, Indeterminate):
            undecided += 1
            continue
        if verdict.holds:
            return EIOpenFound(l, verdict)
    return Exhausted(tuple(tried), undecided)
