"""JSON documents accepted by the command line: bundle specs and search boxes."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .bundles import ExtensionBundle
from .divisors import DivisorClass, PlaneClass, RuledBase
from .verdict import DomainError

__all__ = [
    "BaseSpec",
    "BundleSpecDocument",
    "SearchBoxDocument",
    "SpecError",
    "load_bundle_spec",
    "load_search_box",
    "bundle_from_spec",
    "format_validation_error",
]

ClassSpec = Union[int, tuple[int, int]]
Range = tuple[int, int]


class SpecError(ValueError):
    """A document failed validation; ``str()`` carries the field path."""


class BaseSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["P2", "rational", "elliptic", "genus"]
    e: int = 0
    g: Optional[int] = None
    decomposable: Optional[bool] = None

    def build(self) -> RuledBase:
        if self.kind == "P2":
            return RuledBase.plane()
        if self.kind == "rational":
            return RuledBase.hirzebruch(self.e)
        if self.kind == "elliptic":
            dec = self.decomposable if self.decomposable is not None else self.e >= 0
            return RuledBase.elliptic(self.e, dec)
        if self.g is None:
            raise ValueError("g is required for a genus-g ruled base")
        return RuledBase.genus(self.g, self.e)


class BundleSpecDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    base: BaseSpec
    L: ClassSpec
    M: ClassSpec
    w: int = Field(0, ge=0)
    lm: int = Field(1, ge=1)
    general_position: bool = True
    label: str = ""

    @model_validator(mode="after")
    def _class_shapes(self) -> "BundleSpecDocument":
        plane = self.base.kind == "P2"
        for name in ("L", "M"):
            value = getattr(self, name)
            if plane and not isinstance(value, int):
                raise ValueError(f"{name}: a class on P2 is a single integer degree")
            if not plane and isinstance(value, int):
                raise ValueError(f"{name}: a class on a ruled surface is a pair [a, b]")
        return self

    def to_bundle(self) -> ExtensionBundle:
        try:
            base = self.base.build()
        except (DomainError, ValueError) as exc:
            raise SpecError(f"base: {exc}") from exc
        make = PlaneClass if base.is_plane else (lambda v: DivisorClass(*v))
        try:
            return ExtensionBundle(
                base, make(self.L), make(self.M), self.w, self.lm, self.general_position, self.label
            )
        except DomainError as exc:
            raise SpecError(f"bundle: {exc}") from exc


def _as_range(v):
    if isinstance(v, int):
        return (v, v)
    return v


class BoxBase(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["rational", "elliptic"] = "rational"
    decomposable: bool = True


class SearchBoxDocument(BaseModel):
    """Inclusive integer ranges for every extension parameter."""

    model_config = ConfigDict(extra="forbid")

    base: BoxBase = BoxBase()
    e: Range
    a_l: Range
    b_l: Range
    a_m: Range
    b_m: Range
    w: Range = (0, 0)
    lm: Range = (1, 1)
    general_position: Optional[bool] = None
    x_max: Optional[int] = None
    z_max: int = Field(12, ge=1)
    require_existence: bool = True

    @field_validator("e", "a_l", "b_l", "a_m", "b_m", "w", "lm", mode="before")
    @classmethod
    def _scalar_to_range(cls, v):
        return _as_range(v)

    @field_validator("e", "a_l", "b_l", "a_m", "b_m", "w", "lm")
    @classmethod
    def _ordered(cls, v: Range) -> Range:
        if v[0] > v[1]:
            raise ValueError(f"empty range [{v[0]}, {v[1]}]")
        return v

    @property
    def size(self) -> int:
        n = 1
        for name in ("e", "a_l", "b_l", "a_m", "b_m", "w", "lm"):
            lo, hi = getattr(self, name)
            n *= hi - lo + 1
        return n


def format_validation_error(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        loc = ".".join(str(p) for p in err["loc"]) or "<document>"
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


def _read_json(path: Union[str, Path]) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def bundle_from_spec(data: object) -> ExtensionBundle:
    try:
        doc = BundleSpecDocument.model_validate(data)
    except ValidationError as exc:
        raise SpecError(format_validation_error(exc)) from exc
    return doc.to_bundle()


def load_bundle_spec(path: Union[str, Path]) -> ExtensionBundle:
    return bundle_from_spec(_read_json(path))


def load_search_box(path: Union[str, Path]) -> SearchBoxDocument:
    try:
        return SearchBoxDocument.model_validate(_read_json(path))
    except ValidationError as exc:
        raise SpecError(format_validation_error(exc)) from exc
