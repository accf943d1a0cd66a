"""Append-only JSONL catalog of certified bundles.

One entry per line, schema field ``"v": 1``.  Appends take an exclusive
``flock`` on the file, check for a duplicate (spec, criterion) key, write one
line and fsync.  Readers take no lock and may see a prefix of the file; a
torn or corrupt line is skipped with a warning and counted.
"""
from __future__ import annotations

import fcntl
import json
import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional, Union

from ..invariants import ScrollInvariants

__all__ = [
    "SCHEMA_VERSION",
    "CatalogEntry",
    "AppendStatus",
    "QueryResult",
    "Catalog",
    "spec_key",
    "DEFAULT_CATALOG_ENV",
    "default_catalog_path",
]

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_CATALOG_ENV = "SCROLLSMITH_CATALOG"


def default_catalog_path() -> Path:
    return Path(os.environ.get(DEFAULT_CATALOG_ENV, "scrollsmith-catalog.jsonl"))


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


def spec_key(spec: dict, criterion: str) -> str:
    """Identity of a catalog entry: the bundle data without its label, plus the criterion."""
    core = {k: v for k, v in spec.items() if k != "label"}
    return _dumps({"spec": core, "criterion": criterion})


@dataclass(frozen=True)
class CatalogEntry:
    spec: dict
    criterion: str
    witness: Optional[tuple[int, int]]
    invariants: ScrollInvariants
    digest: str
    timestamp: Optional[str] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def key(self) -> str:
        return spec_key(self.spec, self.criterion)

    def to_json(self) -> dict:
        return {
            "v": SCHEMA_VERSION,
            "spec": self.spec,
            "criterion": self.criterion,
            "witness": None if self.witness is None else {"x": self.witness[0], "z": self.witness[1]},
            "invariants": self.invariants.to_json(),
            "digest": self.digest,
            "timestamp": self.timestamp,
            "notes": list(self.notes),
        }

    def to_line(self) -> str:
        return _dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "CatalogEntry":
        if data.get("v") != SCHEMA_VERSION:
            raise ValueError(f"unsupported catalog schema version {data.get('v')!r}")
        w = data["witness"]
        inv = data["invariants"]
        return cls(
            spec=data["spec"],
            criterion=data["criterion"],
            witness=None if w is None else (int(w["x"]), int(w["z"])),
            invariants=ScrollInvariants(
                int(inv["degree"]), int(inv["sectional_genus"]), inv["ambient_dim"], inv["base_label"]
            ),
            digest=data["digest"],
            timestamp=data.get("timestamp"),
            notes=tuple(data.get("notes", ())),
        )


class AppendStatus(str, Enum):
    APPENDED = "appended"
    DUPLICATE = "duplicate"

    def __str__(self) -> str:
        return self.value


@dataclass
class QueryResult:
    entries: list[CatalogEntry]
    skipped: int = 0


def _in(value: Optional[int], bounds: Optional[tuple[Optional[int], Optional[int]]]) -> bool:
    if bounds is None:
        return True
    if value is None:
        return False
    lo, hi = bounds
    return (lo is None or value >= lo) and (hi is None or value <= hi)


class Catalog:
    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def _scan(self, handle) -> Iterator[tuple[Optional[CatalogEntry], int]]:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield CatalogEntry.from_json(json.loads(line)), lineno
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("%s:%d: skipping corrupt catalog line (%s)", self.path, lineno, exc)
                yield None, lineno

    def append(self, entry: CatalogEntry) -> AppendStatus:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a+", encoding="utf-8") as fh:
            fcntl.flock(fh.fileno(), fcntl.LOCK_EX)
            try:
                fh.seek(0)
                key = entry.key
                for existing, _ in self._scan(fh):
                    if existing is not None and existing.key == key:
                        return AppendStatus.DUPLICATE
                fh.seek(0, os.SEEK_END)
                if fh.tell() > 0:
                    fh.seek(fh.tell() - 1)
                    if fh.read(1) != "\n":
                        # a torn trailing line must not swallow the new entry
                        fh.write("\n")
                fh.write(entry.to_line() + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            finally:
                fcntl.flock(fh.fileno(), fcntl.LOCK_UN)
        return AppendStatus.APPENDED

    def query(
        self,
        degree: Optional[tuple[Optional[int], Optional[int]]] = None,
        genus: Optional[tuple[Optional[int], Optional[int]]] = None,
        base_kind: Optional[str] = None,
    ) -> QueryResult:
        result = QueryResult([])
        if not self.path.exists():
            return result
        with open(self.path, encoding="utf-8") as fh:
            for entry, _ in self._scan(fh):
                if entry is None:
                    result.skipped += 1
                    continue
                if not _in(entry.invariants.degree, degree):
                    continue
                if not _in(entry.invariants.sectional_genus, genus):
                    continue
                if base_kind is not None and entry.spec.get("base", {}).get("kind") != base_kind:
                    continue
                result.entries.append(entry)
        return result
