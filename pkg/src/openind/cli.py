"""Command line entry point: single operations and theorem checks.

Exit codes: 0 success, 2 disagreement or unexpected outcome, 3 input
error, 4 a resource cap left something undecided.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import limits
from .errors import InvariantError, ModelMismatch, ParseError, PreconditionError, ResourceCapError
from .formulas import EIOpenFound, check_eiopen_instance, check_induction, check_l_induction, parse_formula
from .fraction_field import Frac, frac_integer_part
from .harness import EXPECTED, THEOREMS, CheckBounds, check_corollaries
from .models import ModelContext, ModelId
from .poly import Poly
from .rc import dense_between, ip_root, ipi_check
from .results import Indeterminate, NotFound
from .roots import RootElem, root_elem
from .text import clear_denominators, parse_expr

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_CAP = 0, 2, 3, 4

_ROOT = re.compile(r"^\s*rcroot\s*\((.*),\s*(\d+)\s*\)\s*$", re.S)


class InputError(ValueError):
    pass


# -- argument parsing helpers --------------------------------------------------

def parse_t_poly(model: ModelContext, text: str, ring: bool) -> Poly:
    """Polynomial in t; coefficients in M when ``ring``, else in FF(M)."""
    _check_case(model, text)
    with limits.using(model.limits):
        p = parse_expr(text)
    for c in p.coeffs:
        f = Frac.lift(c)
        if ring:
            if f.den != 1:
                raise InputError(f"coefficient {f.format(model.var)} is not a ring element")
            why = model.violation(f.num)
            if why:
                raise InputError(why)
        else:
            for part in (f.num, f.den):
                if not model.in_fraction_field(part):
                    raise InputError(f"coefficient {f.format(model.var)} is outside FF({model.id.name})")
    return p


def _check_case(model: ModelContext, text: str):
    if model.id is not ModelId.ZX_LEX and "X" in text:
        raise ParseError("use lowercase x outside the ZX model", text.index("X"))


def parse_rcroot(model: ModelContext, text: str) -> RootElem:
    m = _ROOT.match(text)
    if not m:
        raise InputError("expected rcroot(<polynomial in t>, <index>)")
    p = parse_t_poly(model, m.group(1), ring=False)
    with limits.using(model.limits):
        return root_elem(clear_denominators(p), int(m.group(2)))


# -- output ----------------------------------------------------------------------

def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _status(out) -> int:
    return EXIT_CAP if isinstance(out, Indeterminate) else EXIT_OK


def _outcome(model, out, fmt) -> tuple[dict, str]:
    if isinstance(out, NotFound):
        return {"result": "not_found", "certificate": out.certificate}, f"not found: {out.certificate}"
    if isinstance(out, Indeterminate):
        return {"result": "indeterminate", "reason": out.reason}, f"indeterminate: {out.reason}"
    return {"result": "found", "value": fmt(out)}, fmt(out)


# -- subcommands --------------------------------------------------------------------

def cmd_ip(args, model):
    f = model.parse_frac(_case(model, args.frac))
    with limits.using(model.limits):
        out = frac_integer_part(model, f)
    payload, text = _outcome(model, out, model.format)
    _emit(args, payload, text)
    return _status(out)


def _case(model, text):
    _check_case(model, text)
    return text


def cmd_root_ip(args, model):
    r = parse_rcroot(model, args.root)
    with limits.using(model.limits):
        out = ip_root(r, model)
    payload, text = _outcome(model, out, lambda v: model.format(v.value))
    _emit(args, payload, text)
    return _status(out)


def cmd_ipi(args, model):
    f = clear_denominators(parse_t_poly(model, args.f, ring=True))
    a, b, y = (model.parse(_case(model, s)) for s in (args.a, args.b, args.y))
    with limits.using(model.limits):
        out = ipi_check(model, f, a, b, y)
    payload, text = _outcome(model, out, lambda v: model.format(v.value))
    _emit(args, payload, text)
    return _status(out)


def cmd_density(args, model):
    r, s = parse_rcroot(model, args.r), parse_rcroot(model, args.s)
    with limits.using(model.limits):
        out = dense_between(model, r, s)
    payload, text = _outcome(model, out, lambda v: v.format(model.var))
    _emit(args, payload, text)
    return _status(out)


def _params(model, texts):
    return [model.parse(_case(model, t)) for t in texts or []]


def _verdict(args, model, out):
    if isinstance(out, Indeterminate):
        _emit(args, {"result": "indeterminate", "reason": out.reason}, f"indeterminate: {out.reason}")
        return EXIT_CAP
    payload = {"holds": out.holds, "reason": out.reason,
               "witness": None if out.witness is None else model.format(out.witness),
               "certificate": {k: v for k, v in out.certificate}}
    _emit(args, payload, out.describe(model.var))
    return EXIT_OK


def cmd_induction(args, model):
    phi = parse_formula(_case(model, args.formula))
    params = _params(model, args.params)
    with limits.using(model.limits):
        out = check_induction(phi, params, model)
    return _verdict(args, model, out)


def cmd_l_induction(args, model):
    phi = parse_formula(_case(model, args.formula))
    params = _params(model, args.params)
    l = model.parse(_case(model, args.l))
    with limits.using(model.limits):
        out = check_l_induction(phi, l, params, model)
    return _verdict(args, model, out)


def cmd_eiopen(args, model):
    psi = parse_formula(_case(model, args.formula))
    params = _params(model, args.params)
    if args.l_bound <= 0:
        raise InputError("--l-bound must be positive")
    with limits.using(model.limits):
        out = check_eiopen_instance(psi, params, model, args.l_bound)
    if isinstance(out, EIOpenFound):
        payload = {"result": "found", "l": model.format(out.l),
                   "verdict": out.verdict.describe(model.var)}
        _emit(args, payload, f"l = {model.format(out.l)}: {out.verdict.describe(model.var)}")
        return EXIT_OK
    reason = getattr(out, "reason", None) or f"no l found up to {args.l_bound}"
    _emit(args, {"result": "indeterminate", "reason": reason}, f"indeterminate: {reason}")
    return EXIT_CAP


def report_status(reports, model: ModelContext) -> int:
    expected = EXPECTED[model.id]
    code = EXIT_OK
    for rep in reports:
        if not rep.agreement or any(c.holds is not None and c.holds is not expected
                                    for c in rep.conditions):
            return EXIT_DISAGREE
        if any(c.holds is None for c in rep.conditions):
            code = EXIT_CAP
    return code


def cmd_theorem(args, model):
    bounds = CheckBounds(max_degree=args.max_degree, max_coeff=args.max_coeff,
                         trials=args.trials, seed=args.seed, bisection=args.cap_bisect,
                         terms=args.cap_terms, l_bound=args.l_bound)
    if args.which == "cor":
        reports = check_corollaries(model, bounds)
    else:
        reports = [THEOREMS[args.which](model, bounds)]
    if args.json:
        data = [r.to_json() for r in reports]
        print(json.dumps(data[0] if len(data) == 1 else data, indent=2))
    else:
        for rep in reports:
            print(_report_text(rep))
    return report_status(reports, model)


def _report_text(rep) -> str:
    lines = [f"{rep.theorem} on {rep.model} (seed {rep.seed}, {rep.bounds['trials']} trials)"]
    for c in rep.conditions:
        state = "indeterminate" if c.holds is None else ("holds" if c.holds else "fails")
        lines.append(f"  ({c.id}) {state}" + (f"  [{c.note}]" if c.note else ""))
        for w in c.counterexamples[:1] or c.witnesses[:1]:
            lines.append(f"      {w}")
    lines.append(f"  agreement: {str(rep.agreement).lower()}, "
                 f"indeterminate: {rep.indeterminate_count}, {rep.elapsed_ms} ms")
    for d in rep.disagreements:
        lines.append(f"  disagreement: {d}")
    return "\n".join(lines)


# -- parser ---------------------------------------------------------------------------

def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the flags without defaults so either position works
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--model", default=d("z"), help="z, zx or shep")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--trials", type=int, default=d(100))
    p.add_argument("--max-degree", type=int, default=d(4))
    p.add_argument("--max-coeff", type=int, default=d(20))
    p.add_argument("--json", action="store_true", default=d(False))
    p.add_argument("--cap-bisect", type=int, default=d(10_000))
    p.add_argument("--cap-terms", type=int, default=d(128))
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=False)
    sub_common = _global_flags(suppress=True)

    ap = argparse.ArgumentParser(prog="openind", parents=[common],
                                 description="Integer parts, density and open induction checks.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[sub_common], help=help_)
        p.set_defaults(fn=fn)
        return p

    add("ip", cmd_ip, "integer part of a fraction").add_argument("frac")
    add("root-ip", cmd_root_ip, "integer part of rcroot(p, k)").add_argument("root")
    p = add("ipi", cmd_ipi, "ipi instance for f, a, b, y")
    for name in ("f", "a", "b", "y"):
        p.add_argument(name)
    p = add("density", cmd_density, "a fraction strictly between two roots")
    p.add_argument("r")
    p.add_argument("s")
    p = add("induction", cmd_induction, "open induction on x for one formula")
    p.add_argument("formula")
    p.add_argument("--params", nargs="*", default=[])
    p = add("l-induction", cmd_l_induction, "induction with stride l")
    p.add_argument("formula")
    p.add_argument("--l", required=True)
    p.add_argument("--params", nargs="*", default=[])
    p = add("eiopen", cmd_eiopen, "search a stride l making the instance hold")
    p.add_argument("formula")
    p.add_argument("--l-bound", type=int, default=16)
    p.add_argument("--params", nargs="*", default=[])
    p = add("theorem", cmd_theorem, "check every condition of a theorem on samples")
    p.add_argument("which", choices=["t1", "t2", "t3", "t4", "cor"])
    p.add_argument("--l-bound", type=int, default=16)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        model = ModelContext(ModelId.parse(args.model),
                             limits.Limits(bisection=args.cap_bisect, terms=args.cap_terms))
        return args.fn(args, model)
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, InvariantError, ModelMismatch, PreconditionError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
