"""Resource limits for refinement and expansion loops.

Limits live in a context variable so concurrent callers can run with
different caps without sharing mutable state.
"""
from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    bisection: int = 10_000
    terms: int = 128
    exponent_den: int = 64

    def __post_init__(self):
        if min(self.bisection, self.terms, self.exponent_den) <= 0:
            raise ValueError("limits must be positive")


_current: ContextVar[Limits] = ContextVar("openind_limits", default=Limits())


def current() -> Limits:
    return _current.get()


@contextmanager
def using(limits: Limits | None = None, **overrides):
    base = limits if limits is not None else current()
    token = _current.set(replace(base, **overrides) if overrides else base)
    try:
        yield _current.get()
    finally:
        _current.reset(token)
