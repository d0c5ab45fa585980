"""The three discretely ordered rings.

All elements are ``Puiseux`` values; a model is a membership predicate on
that ring together with its fraction-field predicate and text syntax.

* ``Z`` - integer constants.
* ``ZX_LEX`` - Z[X] with X above every integer (a negative control).
* ``SHEPHERDSON`` - Puiseux polynomials with nonnegative rational exponents,
  real algebraic coefficients and an integer constant term.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from . import limits as _limits
from .errors import InvariantError, ModelMismatch, ParseError
from .fraction_field import Frac
from .puiseux import Puiseux
from .realalg import is_rational
from .text import parse_frac


class ModelId(enum.Enum):
    Z = "z"
    ZX_LEX = "zx"
    SHEPHERDSON = "shep"

    @classmethod
    def parse(cls, name: str) -> "ModelId":
        aliases = {"z": cls.Z, "zx": cls.ZX_LEX, "zx_lex": cls.ZX_LEX,
                   "shep": cls.SHEPHERDSON, "shepherdson": cls.SHEPHERDSON}
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ValueError(f"unknown model {name!r}") from None


@dataclass(frozen=True)
class ModelContext:
    id: ModelId
    limits: _limits.Limits = field(default_factory=_limits.Limits)

    @classmethod
    def of(cls, name: "str | ModelId", **caps) -> "ModelContext":
        mid = name if isinstance(name, ModelId) else ModelId.parse(name)
        return cls(mid, _limits.Limits(**caps))

    @property
    def var(self) -> str:
        return "X" if self.id is ModelId.ZX_LEX else "x"

    # -- membership --------------------------------------------------------
    def violation(self, a: Puiseux) -> str | None:
        """Why ``a`` is not an element of this model, or None."""
        for e, c in a.terms:
            if self.id is ModelId.Z:
                if e != 0:
                    return "Z elements are integer constants"
            elif self.id is ModelId.ZX_LEX:
                if e < 0 or e.denominator != 1:
                    return f"exponent {e} is not a natural number"
            elif e < 0:
                return f"exponent {e} is negative"
            if self.id is not ModelId.SHEPHERDSON or e == 0:
                if not is_rational(c) or Fraction(c).denominator != 1:
                    if self.id is ModelId.SHEPHERDSON:
                        return "constant term must be an integer"
                    return f"coefficient {c} is not an integer"
        return None

    def contains(self, a) -> bool:
        return isinstance(a, Puiseux) and self.violation(a) is None

    def check(self, *elems) -> None:
        for a in elems:
            if not isinstance(a, Puiseux):
                raise ModelMismatch(f"model mismatch: {a!r} is not a ring element")
            why = self.violation(a)
            if why:
                raise ModelMismatch(f"model mismatch: {a.format(self.var)} is not in {self.id.name} ({why})")

    def admits_exponent(self, e: Fraction) -> bool:
        """Exponents that fraction-field elements may carry."""
        if self.id is ModelId.Z:
            return e == 0
        if self.id is ModelId.ZX_LEX:
            return e.denominator == 1
        return True

    def in_fraction_field(self, p: Puiseux) -> bool:
        """Whether a finite Puiseux element lies in FF(M)."""
        for e, c in p.terms:
            if not self.admits_exponent(e):
                return False
            if self.id is not ModelId.SHEPHERDSON and not is_rational(c):
                return False
        return True

    def as_fraction(self, p: Puiseux) -> tuple[Puiseux, Puiseux]:
        """Write an FF(M) element given as a Puiseux value as ``m / l`` in M."""
        if not self.in_fraction_field(p):
            raise ValueError("not an element of the fraction field")
        if p.is_zero():
            return p, self.one
        if self.id is ModelId.SHEPHERDSON:
            low = min(p.exponents())
            shift = Fraction(max(0, -low)) + 1
            mono = Puiseux.monomial(1, shift)
            return p * mono, mono
        import math

        den = 1
        for _, c in p.terms:
            den = math.lcm(den, Fraction(c).denominator)
        low = min(p.exponents())
        shift = max(0, -low)
        l = Puiseux.monomial(den, shift)
        return p * l, l

    # -- ring structure ----------------------------------------------------
    @property
    def zero(self) -> Puiseux:
        return Puiseux()

    @property
    def one(self) -> Puiseux:
        return Puiseux.const(1)

    def from_int(self, n: int) -> Puiseux:
        return Puiseux.const(n)

    def add(self, a, b):
        self.check(a, b)
        return a + b

    def sub(self, a, b):
        self.check(a, b)
        return a - b

    def mul(self, a, b):
        self.check(a, b)
        with _limits.using(self.limits):
            out = a * b
        return out

    def neg(self, a):
        self.check(a)
        return -a

    def cmp(self, a, b) -> int:
        self.check(a, b)
        return a.compare(b)

    def is_nonnegative(self, a) -> bool:
        self.check(a)
        return a.sign() >= 0

    # -- text ----------------------------------------------------------------
    def parse(self, text: str) -> Puiseux:
        if self.id is not ModelId.ZX_LEX and "X" in text:
            raise ParseError("use lowercase x outside the ZX model", text.index("X"))
        with _limits.using(self.limits):
            f = parse_frac(text)
        if f.den != 1:
            if self.id is ModelId.SHEPHERDSON and f.num.is_constant():
                raise InvariantError("constant term must be an integer")
            raise InvariantError(f"{text!r} is not a ring element of {self.id.name}")
        a = f.num
        why = self.violation(a)
        if why:
            raise InvariantError(why)
        return a

    def parse_frac(self, text: str) -> Frac:
        with _limits.using(self.limits):
            f = parse_frac(text)
        for part in (f.num, f.den):
            if not self.in_fraction_field(part):
                raise InvariantError(f"{text!r} is not in the fraction field of {self.id.name}")
        return f

    def format(self, a) -> str:
        if isinstance(a, Frac):
            return a.format(self.var)
        return a.format(self.var)


def discreteness_probe(m: ModelContext, samples) -> tuple[bool, Puiseux | None]:
    """Check ``0 < a -> 1 <= a`` on samples; returns (passed, counterexample)."""
    one = m.one
    for a in samples:
        m.check(a)
        if a.sign() > 0 and a.compare(one) < 0:
            return False, a
    return True, None


Z = ModelContext(ModelId.Z)
ZX = ModelContext(ModelId.ZX_LEX)
SHEP = ModelContext(ModelId.SHEPHERDSON)
