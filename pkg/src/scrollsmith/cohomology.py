"""Line-bundle cohomology on F_e and P2, vanishing tests elsewhere.

Exact values come from pushing forward along the ruling: for a >= 0,
rho_* O(aC0 + bf) = sum_{i=0..a} O(b - ie) on P1, and R^1 rho_* vanishes.
Negative a is handled by Serre duality.  On elliptic ruled surfaces only a
sufficient slope test for h1 vanishing is offered.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .divisors import (
    FIBRE,
    AnyClass,
    BlownPlaneClass,
    DivisorClass,
    PlaneClass,
    RuledBase,
    euler_characteristic,
    intersect,
)
from .verdict import DomainError, Verdict

__all__ = [
    "CohomologyBound",
    "cohomology",
    "cohomology_rational",
    "cohomology_plane",
    "h0_oracle_lattice",
    "h1_vanishes_elliptic",
    "h1_vanishes",
    "h0_lower_bound_blown_plane",
    "h1_vanishes_with_ideal",
    "imposes_independent_conditions",
    "general_position_surjective",
    "ideal_h0_interval",
]

Interval = tuple[int, int]


@dataclass(frozen=True)
class CohomologyBound:
    h0: Interval
    h1: Interval
    h2: Interval
    exact: bool

    def __post_init__(self) -> None:
        for name in ("h0", "h1", "h2"):
            lo, hi = getattr(self, name)
            if lo < 0 or lo > hi:
                raise ValueError(f"bad interval {name}={lo, hi}")
        if self.exact and any(lo != hi for lo, hi in (self.h0, self.h1, self.h2)):
            raise ValueError("exact bound with a non-degenerate interval")

    @classmethod
    def of(cls, h0: int, h1: int, h2: int) -> "CohomologyBound":
        return cls((h0, h0), (h1, h1), (h2, h2), True)

    @property
    def values(self) -> tuple[int, int, int]:
        if not self.exact:
            raise DomainError("cohomology is only known up to intervals")
        return self.h0[0], self.h1[0], self.h2[0]

    def chi_consistent(self, chi: int) -> bool:
        """Some choice of values in the intervals has alternating sum ``chi``."""
        lo = self.h0[0] - self.h1[1] + self.h2[0]
        hi = self.h0[1] - self.h1[0] + self.h2[1]
        return lo <= chi <= hi

    def to_json(self) -> dict:
        return {"h0": list(self.h0), "h1": list(self.h1), "h2": list(self.h2), "exact": self.exact}


def _p1_h0(n: int) -> int:
    return n + 1 if n >= 0 else 0


@lru_cache(maxsize=None)
def cohomology_rational(D: DivisorClass, e: int) -> CohomologyBound:
    if e < 0:
        raise DomainError(f"F_e needs e >= 0, got {e}")
    a, b = D.a, D.b
    if a == -1:
        return CohomologyBound.of(0, 0, 0)
    if a <= -2:
        dual = cohomology_rational(DivisorClass(-2 - a, -2 - e - b), e)
        h0, h1, h2 = dual.values
        return CohomologyBound.of(h2, h1, h0)
    h0 = sum(_p1_h0(b - i * e) for i in range(a + 1))
    h1 = sum(_p1_h0(i * e - b - 2) for i in range(a + 1))
    return CohomologyBound.of(h0, h1, 0)


def h0_oracle_lattice(D: DivisorClass, e: int) -> int:
    """Count monomials x^i y^j with 0 <= i <= a, 0 <= j <= b - ie."""
    if e < 0:
        raise DomainError(f"F_e needs e >= 0, got {e}")
    count = 0
    i = 0
    while i <= D.a:
        j = 0
        while j <= D.b - i * e:
            count += 1
            j += 1
        i += 1
    return count


def cohomology_plane(d: int) -> CohomologyBound:
    h0 = comb(d + 2, 2) if d >= 0 else 0
    h2 = comb(-d - 1, 2) if d <= -3 else 0
    return CohomologyBound.of(h0, 0, h2)


def cohomology(D: AnyClass, base: RuledBase) -> CohomologyBound:
    """Exact cohomology where it is numerically determined (F_e and P2)."""
    if base.is_plane:
        if not isinstance(D, PlaneClass):
            raise DomainError(f"{D!r} is not a class on P2")
        return cohomology_plane(D.d)
    if base.is_rational:
        if not isinstance(D, DivisorClass):
            raise DomainError(f"{D!r} is not a class on {base.label}")
        return cohomology_rational(D, base.e)
    raise DomainError(f"no exact cohomology on {base.label}")


def h1_vanishes_elliptic(D: DivisorClass, base: RuledBase) -> Verdict:
    if not base.is_elliptic:
        raise DomainError(f"{base.label} is not an elliptic ruled surface")
    if D.a == -1:
        return Verdict.ESTABLISHED
    if D.a >= 0 and D.b + D.a * base.mu_minus > 0:
        return Verdict.ESTABLISHED
    return Verdict.INCONCLUSIVE


def h1_vanishes(D: AnyClass, base: RuledBase) -> Verdict:
    """Tri-state h1(D) = 0: exact on F_e and P2, sufficient on elliptic bases."""
    if base.is_elliptic:
        return h1_vanishes_elliptic(D, base)
    if base.is_plane or base.is_rational:
        return Verdict.ESTABLISHED if cohomology(D, base).h1[0] == 0 else Verdict.REFUTED
    return Verdict.INCONCLUSIVE


def _h0_lower(D: AnyClass, base: RuledBase) -> int:
    """A sound lower bound for h0(D) on any supported base."""
    if base.is_plane or base.is_rational:
        return cohomology(D, base).h0[0]
    if base.is_elliptic and D.a >= 0:
        # h2(D) = h0(K - D) = 0 since K - D has C0-coefficient <= -2
        return max(0, euler_characteristic(D, base))
    return 0


def h0_lower_bound_blown_plane(C: BlownPlaneClass) -> int:
    if C.d < 0:
        raise DomainError(f"degree must be non-negative, got {C.d}")
    expected = comb(C.d + 2, 2) - sum(comb(m + 1, 2) for m in C.mults)
    return max(0, expected)


def h1_vanishes_with_ideal(D: DivisorClass, w: int, base: RuledBase) -> Verdict:
    """h1(D tensor I_W) = 0 for w points in general position on F_1."""
    if w < 0:
        raise DomainError(f"w must be non-negative, got {w}")
    if not (base.is_rational and base.e == 1):
        raise DomainError(f"the general-position vanishing test lives on F_1, not {base.label}")
    if not isinstance(D, DivisorClass):
        raise DomainError(f"{D!r} is not a class on F_1")
    if D.a >= 0 and D.b >= 1 and D.b >= D.a and cohomology_rational(D, 1).h0[0] >= w:
        return Verdict.ESTABLISHED
    return Verdict.INCONCLUSIVE


def _on_one_fibre(w: int, lm: int | None) -> bool:
    return lm is not None and w >= 1 and lm == w


def imposes_independent_conditions(
    D: AnyClass,
    w: int,
    base: RuledBase,
    *,
    general_position: bool = True,
    lm: int | None = None,
) -> Verdict:
    """Whether W imposes w independent conditions on |D|.

    Two certified routes: W general with h0(D) >= w, or W lying on a single
    fibre with H0(D) surjecting onto H0(D|f) (h1(D - f) = 0) and D.f >= w - 1.
    """
    if w < 0:
        raise DomainError(f"w must be non-negative, got {w}")
    if w == 0:
        return Verdict.ESTABLISHED
    if general_position and _h0_lower(D, base) >= w:
        return Verdict.ESTABLISHED
    if _on_one_fibre(w, lm) and not base.is_plane:
        if h1_vanishes(D - FIBRE, base) is Verdict.ESTABLISHED and intersect(D, FIBRE, base) >= w - 1:
            return Verdict.ESTABLISHED
    return Verdict.INCONCLUSIVE


def general_position_surjective(
    D: AnyClass,
    w: int,
    base: RuledBase,
    *,
    general_position: bool = True,
    lm: int | None = None,
) -> Verdict:
    """H0(D) -> H0(D|W) is onto and h1(D tensor I_W) = 0."""
    if w < 0:
        raise DomainError(f"w must be non-negative, got {w}")
    if w == 0:
        return Verdict.ESTABLISHED
    independent = imposes_independent_conditions(D, w, base, general_position=general_position, lm=lm)
    if independent is Verdict.ESTABLISHED and h1_vanishes(D, base) is Verdict.ESTABLISHED:
        return Verdict.ESTABLISHED
    return Verdict.INCONCLUSIVE


def ideal_h0_interval(
    D: AnyClass,
    w: int,
    base: RuledBase,
    *,
    general_position: bool = True,
    lm: int | None = None,
) -> tuple[int, int, bool]:
    """(lo, hi, exact) for h0(D tensor I_W) on F_e or P2."""
    h0 = cohomology(D, base).h0[0]
    lo = max(0, h0 - w)
    if w == 0:
        return h0, h0, True
    if imposes_independent_conditions(D, w, base, general_position=general_position, lm=lm) is Verdict.ESTABLISHED:
        return lo, lo, True
    if general_position:
        # more general points than sections: nothing survives
        return 0, 0, True
    return lo, h0, lo == h0
