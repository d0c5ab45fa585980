"""Outcome values shared by the decision procedures."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class NotFound:
    """A certified refutation: the sought witness does not exist."""

    certificate: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Indeterminate:
    """The search hit a resource cap or an unsupported case."""

    reason: str

    def __bool__(self):
        return False
