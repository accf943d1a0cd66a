"""Tri-state verdicts and the package-wide domain error."""
from __future__ import annotations

from enum import Enum


class DomainError(ValueError):
    """Raised when inputs violate an operation's standing hypotheses."""


class Verdict(str, Enum):
    ESTABLISHED = "Established"
    INCONCLUSIVE = "Inconclusive"
    REFUTED = "Refuted"
    # refuted-style outcome backed by a cited geometric argument rather than a computation
    NOT_VERY_AMPLE_BY_CITED_ARGUMENT = "NotVeryAmpleByCitedArgument"

    def __str__(self) -> str:
        return self.value

    @property
    def is_refutation(self) -> bool:
        return self in (Verdict.REFUTED, Verdict.NOT_VERY_AMPLE_BY_CITED_ARGUMENT)


def all_of(statuses) -> Verdict:
    """Conjunction of tri-states: any Refuted wins, then any Inconclusive."""
    statuses = list(statuses)
    if any(s is Verdict.REFUTED for s in statuses):
        return Verdict.REFUTED
    if all(s is Verdict.ESTABLISHED for s in statuses):
        return Verdict.ESTABLISHED
    return Verdict.INCONCLUSIVE


def from_bool(ok: bool) -> Verdict:
    return Verdict.ESTABLISHED if ok else Verdict.REFUTED
