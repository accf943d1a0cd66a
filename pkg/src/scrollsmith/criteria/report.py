"""Per-condition ledgers returned by every criterion checker."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from ..verdict import Verdict

__all__ = ["Condition", "ConditionReport", "sufficient", "necessary"]


@dataclass(frozen=True)
class Condition:
    name: str
    status: Verdict
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


def _jsonable(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Verdict):
        return value.value
    return value


@dataclass
class ConditionReport:
    criterion: str
    conditions: list[Condition]
    verdict: Verdict
    source: str = ""
    witness: Optional[tuple[int, int]] = None
    extras: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def status(self, name: str) -> Verdict:
        for c in self.conditions:
            if c.name == name:
                return c.status
        raise KeyError(name)

    @property
    def established(self) -> bool:
        return self.verdict is Verdict.ESTABLISHED

    def to_json(self) -> dict:
        out = {
            "criterion": self.criterion,
            "verdict": self.verdict.value,
            "conditions": [c.to_json() for c in self.conditions],
            "source": self.source,
            "witness": None if self.witness is None else {"x": self.witness[0], "z": self.witness[1]},
            "extras": _jsonable(self.extras),
            "notes": list(self.notes),
        }
        return out

    def digest(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


def sufficient(criterion: str, conditions: Iterable[Condition], **kw) -> ConditionReport:
    """Report for a sufficient criterion: Established iff every condition is, otherwise Inconclusive."""
    conditions = list(conditions)
    ok = all(c.status is Verdict.ESTABLISHED for c in conditions)
    return ConditionReport(criterion, conditions, Verdict.ESTABLISHED if ok else Verdict.INCONCLUSIVE, **kw)


def necessary(criterion: str, conditions: Iterable[Condition], **kw) -> ConditionReport:
    """Report for a necessary criterion: Refuted if any condition fails, otherwise Inconclusive."""
    conditions = list(conditions)
    bad = any(c.status is Verdict.REFUTED for c in conditions)
    return ConditionReport(criterion, conditions, Verdict.REFUTED if bad else Verdict.INCONCLUSIVE, **kw)
