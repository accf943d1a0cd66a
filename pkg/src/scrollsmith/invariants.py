"""Degree, sectional genus and ambient dimension of the scroll P(E)."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .bundles import ExtensionBundle, h0_bundle_twist
from .divisors import DivisorClass, PlaneClass, canonical_class, intersect

__all__ = ["ScrollInvariants", "scroll_invariants", "fibre_pair_degree"]


@dataclass(frozen=True)
class ScrollInvariants:
    degree: int
    sectional_genus: int
    ambient_dim: Optional[int]
    base_label: str

    def to_json(self) -> dict:
        return asdict(self)


def scroll_invariants(E: ExtensionBundle) -> ScrollInvariants:
    base = E.base
    c1, c2 = E.c1, E.c2
    degree = intersect(c1, c1, base) - c2
    adj = intersect(canonical_class(base) + c1, c1, base)
    ambient = None
    if base.is_rational or base.is_plane:
        bound = h0_bundle_twist(E, PlaneClass(0) if base.is_plane else DivisorClass(0, 0))
        if bound.exact:
            ambient = bound.h0[0] - 1
    return ScrollInvariants(degree, 1 + adj // 2, ambient, base.label)


def fibre_pair_degree(e: int, a: int, b_l: int, b_m: int) -> int:
    """Closed form of c1^2 - c2 for L = aC0 + b_l f, M = (a+2)C0 + b_m f and w = 2."""
    return (3 * a + 4) * (b_m + b_l) - 2 * b_l - e * (3 * a * a + 6 * a + 4) - 2
