"""Numerical classes on ruled surfaces and P2.

On a ruled surface over a curve of genus g with invariant e the numerical
class group is generated by a section C0 and a fibre f with

    C0^2 = -e,   C0.f = 1,   f^2 = 0.

Classes on P2 are integers (the degree).  Everything here is exact integer
arithmetic; the only rational quantity is the slope ``mu_minus`` of the
normalized rank-2 bundle defining the surface.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union

from .verdict import DomainError, Verdict

__all__ = [
    "BaseKind",
    "RuledBase",
    "DivisorClass",
    "PlaneClass",
    "BlownPlaneClass",
    "C0",
    "FIBRE",
    "intersect",
    "canonical_class",
    "arithmetic_genus",
    "euler_characteristic",
    "is_ample",
    "is_very_ample",
    "embedded_lines",
    "classify_lines",
]


class BaseKind(str, Enum):
    PROJECTIVE_PLANE = "P2"
    RATIONAL_RULED = "rational"
    ELLIPTIC_RULED = "elliptic"
    GENUS_G_RULED = "genus"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RuledBase:
    """A base surface: P2, a Hirzebruch surface F_e, or a ruled surface over a curve.

    Use the constructors :meth:`plane`, :meth:`hirzebruch`, :meth:`elliptic`
    and :meth:`genus` rather than the raw initializer.
    """

    kind: BaseKind
    e: int = 0
    g: int = 0
    decomposable: bool = True
    mu_minus: Fraction = field(default=Fraction(0), compare=False)

    def __post_init__(self) -> None:
        kind = self.kind
        if kind is BaseKind.PROJECTIVE_PLANE:
            if self.e != 0 or self.g != 0:
                raise DomainError("P2 carries no e or g")
        elif kind is BaseKind.RATIONAL_RULED:
            if self.g != 0 or self.e < 0:
                raise DomainError(f"F_e needs g = 0 and e >= 0, got g={self.g}, e={self.e}")
        elif kind is BaseKind.ELLIPTIC_RULED:
            if self.g != 1:
                raise DomainError("elliptic ruled surfaces have g = 1")
            if self.decomposable and self.e < 0:
                raise DomainError(f"decomposable elliptic ruled surface needs e >= 0, got {self.e}")
            if not self.decomposable and self.e not in (0, -1):
                raise DomainError(f"indecomposable elliptic ruled surface needs e in {{0, -1}}, got {self.e}")
        elif kind is BaseKind.GENUS_G_RULED:
            if self.g < 0:
                raise DomainError("genus must be non-negative")
        object.__setattr__(self, "mu_minus", _slope(kind, self.e, self.decomposable))

    @classmethod
    def plane(cls) -> "RuledBase":
        return cls(BaseKind.PROJECTIVE_PLANE)

    @classmethod
    def hirzebruch(cls, e: int) -> "RuledBase":
        return cls(BaseKind.RATIONAL_RULED, e=e, g=0)

    @classmethod
    def elliptic(cls, e: int, decomposable: bool) -> "RuledBase":
        return cls(BaseKind.ELLIPTIC_RULED, e=e, g=1, decomposable=decomposable)

    @classmethod
    def genus(cls, g: int, e: int) -> "RuledBase":
        return cls(BaseKind.GENUS_G_RULED, e=e, g=g, decomposable=e >= 0)

    @property
    def is_plane(self) -> bool:
        return self.kind is BaseKind.PROJECTIVE_PLANE

    @property
    def is_rational(self) -> bool:
        return self.kind is BaseKind.RATIONAL_RULED

    @property
    def is_elliptic(self) -> bool:
        return self.kind is BaseKind.ELLIPTIC_RULED

    @property
    def normalized_degree_one(self) -> bool:
        """True for the elliptic ruled surface of a degree-1 indecomposable bundle."""
        return self.is_elliptic and not self.decomposable and self.e == -1

    @property
    def label(self) -> str:
        if self.is_plane:
            return "P2"
        if self.is_rational:
            return f"F_{self.e}"
        if self.is_elliptic:
            tag = "dec" if self.decomposable else "indec"
            return f"elliptic(e={self.e},{tag})"
        return f"ruled(g={self.g},e={self.e})"


def _slope(kind: BaseKind, e: int, decomposable: bool) -> Fraction:
    if kind is BaseKind.PROJECTIVE_PLANE:
        return Fraction(0)
    if kind is BaseKind.ELLIPTIC_RULED and not decomposable:
        return Fraction(-e, 2)
    # e < 0 forces the normalized bundle to be stable, so the minimal slope is its own slope
    if e < 0:
        return Fraction(-e, 2)
    return Fraction(-e)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """The class a*C0 + b*f on a ruled surface."""

    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.a}C0{self.b:+d}f"

    def to_json(self) -> list[int]:
        return [self.a, self.b]


@dataclass(frozen=True, order=True)
class PlaneClass:
    """The class O(d) on P2."""

    d: int

    def __add__(self, other: "PlaneClass") -> "PlaneClass":
        if not isinstance(other, PlaneClass):
            return NotImplemented
        return PlaneClass(self.d + other.d)

    def __sub__(self, other: "PlaneClass") -> "PlaneClass":
        if not isinstance(other, PlaneClass):
            return NotImplemented
        return PlaneClass(self.d - other.d)

    def __neg__(self) -> "PlaneClass":
        return PlaneClass(-self.d)

    def __mul__(self, k: int) -> "PlaneClass":
        if not isinstance(k, int):
            return NotImplemented
        return PlaneClass(k * self.d)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"O({self.d})"

    def to_json(self) -> int:
        return self.d


AnyClass = Union[DivisorClass, PlaneClass]

C0 = DivisorClass(1, 0)
FIBRE = DivisorClass(0, 1)


@dataclass(frozen=True)
class BlownPlaneClass:
    """d*l - sum(m_i * l_i) on a blow-up of P2; ``mults[0]`` is the special point when there is one."""

    d: int
    mults: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if any(m < 0 for m in self.mults):
            raise DomainError(f"multiplicities must be non-negative: {self.mults}")

    @property
    def self_intersection(self) -> int:
        return self.d * self.d - sum(m * m for m in self.mults)

    def dot(self, other: "BlownPlaneClass") -> int:
        n = max(len(self.mults), len(other.mults))
        ms = self.mults + (0,) * (n - len(self.mults))
        ns = other.mults + (0,) * (n - len(other.mults))
        return self.d * other.d - sum(m * k for m, k in zip(ms, ns))

    def dot_line(self) -> int:
        """Intersection with the pull-back l of a line."""
        return self.d

    def __str__(self) -> str:
        parts = [f"{self.d}l"] + [f"-{m}l{i}" for i, m in enumerate(self.mults) if m]
        return "".join(parts)


def _check(D: AnyClass, base: RuledBase) -> None:
    if base.is_plane:
        if not isinstance(D, PlaneClass):
            raise DomainError(f"{D!r} is not a class on P2")
    elif not isinstance(D, DivisorClass):
        raise DomainError(f"{D!r} is not a class on the ruled surface {base.label}")


def intersect(D1: AnyClass, D2: AnyClass, base: RuledBase) -> int:
    _check(D1, base)
    _check(D2, base)
    if base.is_plane:
        return D1.d * D2.d
    return -base.e * D1.a * D2.a + D1.a * D2.b + D1.b * D2.a


def canonical_class(base: RuledBase) -> AnyClass:
    if base.is_plane:
        return PlaneClass(-3)
    return DivisorClass(-2, 2 * base.g - 2 - base.e)


def structure_euler(base: RuledBase) -> int:
    """chi(O) = 1 - g (the irregularity of a ruled surface is the base genus)."""
    return 1 - base.g


def arithmetic_genus(D: AnyClass, base: RuledBase) -> int:
    K = canonical_class(base)
    twice = intersect(D, D + K, base)
    # adjunction: D(D+K) is always even
    return twice // 2 + 1


def euler_characteristic(D: AnyClass, base: RuledBase) -> int:
    K = canonical_class(base)
    return structure_euler(base) + intersect(D, D - K, base) // 2


def _slope_value(D: DivisorClass, base: RuledBase) -> Fraction:
    return D.b + D.a * base.mu_minus


def is_ample(D: AnyClass, base: RuledBase) -> bool:
    """Exact ampleness on P2 and on every ruled base."""
    _check(D, base)
    if base.is_plane:
        return D.d >= 1
    return D.a >= 1 and _slope_value(D, base) > 0


def is_very_ample(D: AnyClass, base: RuledBase) -> Verdict:
    _check(D, base)
    if base.is_plane:
        return Verdict.ESTABLISHED if D.d >= 1 else Verdict.REFUTED
    if not is_ample(D, base):
        return Verdict.REFUTED
    if base.is_rational:
        return Verdict.ESTABLISHED
    s = _slope_value(D, base)
    if base.is_elliptic:
        ok = s > 1 if base.normalized_degree_one else s >= 3
    else:
        ok = s > 2 * base.g
    return Verdict.ESTABLISHED if ok else Verdict.INCONCLUSIVE


def embedded_lines(H: AnyClass, base: RuledBase) -> list[AnyClass]:
    """Irreducible curve classes mapped to lines by the very ample system |H|.

    On a ruled surface the only candidates are fibres (when H.f = 1) and, over
    a rational base, the negative section C0 (when H.C0 = 1); every other
    irreducible class meets H at least twice.
    """
    if is_very_ample(H, base) is not Verdict.ESTABLISHED:
        raise DomainError(f"{H} is not certified very ample on {base.label}")
    if base.is_plane:
        return [PlaneClass(1)] if H.d == 1 else []
    lines: list[AnyClass] = []
    if intersect(H, FIBRE, base) == 1:
        lines.append(FIBRE)
    if base.g == 0 and intersect(H, C0, base) == 1:
        lines.append(C0)
    return lines


def classify_lines(x: int, base: RuledBase) -> list[DivisorClass]:
    """Lines on the embedding of a ruled surface by |C0 + x f|."""
    if base.is_plane:
        raise DomainError("line classification needs a ruled base")
    return embedded_lines(DivisorClass(1, x), base)
