"""Rank-2 bundles presented as extensions 0 -> L -> E -> M (x) I_W -> 0.

Only the numerical extension data is modelled: the classes L and M, the
length w of the zero-dimensional scheme W, the largest number lm of points
of W on one fibre, and whether W is declared to be in general position.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .cohomology import CohomologyBound, cohomology, h1_vanishes_elliptic, ideal_h0_interval
from .divisors import (
    FIBRE,
    AnyClass,
    BaseKind,
    DivisorClass,
    PlaneClass,
    RuledBase,
    canonical_class,
    euler_characteristic,
    intersect,
)
from .verdict import DomainError, Verdict

__all__ = [
    "ExistenceNote",
    "ExtensionBundle",
    "SplittingType",
    "make_extension_bundle",
    "nontrivial_extension",
    "chern_classes",
    "restrict_to_fibre",
    "restrict_to_curve",
    "h0_bundle_twist",
    "ey_family",
    "plane_quintic_bundle",
    "fibre_pair_bundle",
]


class ExistenceNote(str, Enum):
    SUPPORTED = "Supported"
    UNVERIFIED = "Unverified"

    def __str__(self) -> str:
        return self.value


def _class_ok(D: AnyClass, base: RuledBase) -> bool:
    return isinstance(D, PlaneClass) if base.is_plane else isinstance(D, DivisorClass)


@dataclass(frozen=True)
class ExtensionBundle:
    base: RuledBase
    L: AnyClass
    M: AnyClass
    w: int = 0
    lm: int = 1
    general_position: bool = True
    label: str = ""
    existence_note: ExistenceNote = field(default=ExistenceNote.UNVERIFIED, compare=False)

    def __post_init__(self) -> None:
        if not (_class_ok(self.L, self.base) and _class_ok(self.M, self.base)):
            raise DomainError(f"L and M must be classes on {self.base.label}")
        if self.w < 0:
            raise DomainError(f"w must be non-negative, got {self.w}")
        if self.lm < 1:
            raise DomainError(f"lm must be positive, got {self.lm}")
        if self.lm > max(self.w, 1):
            raise DomainError(f"lm={self.lm} exceeds the number of points w={self.w}")
        if self.general_position and self.base.is_rational and self.base.e == 1 and self.lm > 1:
            raise DomainError("points in general position on F_1 meet each fibre at most once")
        object.__setattr__(self, "existence_note", _existence(self))

    @property
    def effective_lm(self) -> int:
        """Largest number of points of W on one fibre (0 when W is empty)."""
        return self.lm if self.w else 0

    @property
    def c1(self) -> AnyClass:
        return self.L + self.M

    @property
    def c2(self) -> int:
        return intersect(self.L, self.M, self.base) + self.w

    def to_spec(self) -> dict:
        b = self.base
        base = {"kind": b.kind.value}
        if not b.is_plane:
            base["e"] = b.e
        if b.kind is BaseKind.GENUS_G_RULED:
            base["g"] = b.g
        if b.is_elliptic:
            base["decomposable"] = b.decomposable
        return {
            "base": base,
            "L": self.L.to_json(),
            "M": self.M.to_json(),
            "w": self.w,
            "lm": self.lm,
            "general_position": self.general_position,
            "label": self.label,
        }


def nontrivial_extension(E: ExtensionBundle) -> Verdict:
    """Whether a non-split extension with these numbers exists.

    For w > 0 any locally free extension is non-split.  For w = 0 one needs
    Ext^1(M, L) = H1(L - M) != 0; on elliptic bases h1 >= -chi certifies it.
    """
    if E.w > 0:
        return Verdict.ESTABLISHED
    base = E.base
    D = E.L - E.M
    if base.is_plane or base.is_rational:
        return Verdict.ESTABLISHED if cohomology(D, base).h1[0] > 0 else Verdict.REFUTED
    if base.is_elliptic:
        if euler_characteristic(D, base) < 0:
            return Verdict.ESTABLISHED
        if h1_vanishes_elliptic(D, base) is Verdict.ESTABLISHED:
            return Verdict.REFUTED
    return Verdict.INCONCLUSIVE


def _existence(E: ExtensionBundle) -> ExistenceNote:
    """Certify the Cayley-Bacharach condition for W with respect to |K + M - L|."""
    base = E.base
    if E.w == 0:
        ok = nontrivial_extension(E) is Verdict.ESTABLISHED
        return ExistenceNote.SUPPORTED if ok else ExistenceNote.UNVERIFIED
    R = canonical_class(base) + E.M - E.L
    if base.is_plane or base.is_rational:
        h0 = cohomology(R, base).h0[0]
    elif isinstance(R, DivisorClass) and R.a < 0:
        h0 = 0
    else:
        return ExistenceNote.UNVERIFIED
    if h0 == 0:
        return ExistenceNote.SUPPORTED
    # a member of |c f| through one point of a fibre contains the whole fibre
    if not base.is_plane and R.a == 0 and E.lm == E.w:
        return ExistenceNote.SUPPORTED
    # general points: sections through w-1 of them are already zero
    if E.general_position and h0 <= E.w - 1:
        return ExistenceNote.SUPPORTED
    return ExistenceNote.UNVERIFIED


def make_extension_bundle(
    base: RuledBase,
    L: AnyClass,
    M: AnyClass,
    w: int = 0,
    lm: int = 1,
    general_position: bool = True,
    label: str = "",
) -> ExtensionBundle:
    return ExtensionBundle(base, L, M, w, lm, general_position, label)


def chern_classes(E: ExtensionBundle) -> tuple[AnyClass, int]:
    return E.c1, E.c2


@dataclass(frozen=True)
class SplittingType:
    """Edge degrees (d1, d2) of 0 -> O(d1) -> E|gamma -> O(d2) -> 0 on a smooth rational curve.

    The restriction is O(p) + O(q) with p <= q, p + q = d1 + d2, p <= d2 and
    p >= min(d1, d2).
    """

    degrees: tuple[int, int]

    @property
    def total(self) -> int:
        return self.degrees[0] + self.degrees[1]

    @property
    def very_ample(self) -> bool:
        return min(self.degrees) >= 1

    @property
    def not_very_ample_certain(self) -> bool:
        d1, d2 = self.degrees
        return d2 <= 0 or d1 + d2 <= 1

    @property
    def flagged(self) -> bool:
        """Neither certified nor excluded by the degrees alone."""
        return not (self.very_ample or self.not_very_ample_certain)

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "very_ample": self.very_ample,
            "not_very_ample_certain": self.not_very_ample_certain,
        }


def restrict_to_curve(E: ExtensionBundle, gamma: DivisorClass, eps: int) -> SplittingType:
    if E.base.is_plane:
        raise DomainError("restriction to curve classes needs a ruled base")
    if eps < 0 or eps > E.w:
        raise DomainError(f"eps={eps} must lie in [0, w={E.w}]")
    return SplittingType(
        (intersect(E.L, gamma, E.base) + eps, intersect(E.M, gamma, E.base) - eps)
    )


def restrict_to_fibre(E: ExtensionBundle, eps: int) -> SplittingType:
    if eps < 0 or eps > E.effective_lm:
        raise DomainError(f"eps={eps} must lie in [0, lm={E.effective_lm}]")
    return restrict_to_curve(E, FIBRE, eps)


def h0_bundle_twist(E: ExtensionBundle, B: AnyClass) -> CohomologyBound:
    """Interval for h^i(E (x) B) from the twisted extension sequence."""
    base = E.base
    if not (base.is_rational or base.is_plane):
        raise DomainError(f"bundle cohomology is only bounded on F_e and P2, not {base.label}")
    LB, MB = E.L + B, E.M + B
    cl = cohomology(LB, base)
    cm = cohomology(MB, base)
    hL, h1L, h2L = cl.values
    h2M = cm.h2[0]
    i_lo, i_hi, _ = ideal_h0_interval(
        MB, E.w, base, general_position=E.general_position, lm=E.effective_lm or None
    )
    # H0(E(B)) -> H0((M+B) I_W) has image of dimension >= i_lo - h1(L+B)
    h0 = (hL + max(0, i_lo - h1L), hL + i_hi)
    h2 = (h2M, h2M + h2L)
    chi = euler_characteristic(LB, base) + euler_characteristic(MB, base) - E.w
    h1 = (max(0, h0[0] + h2[0] - chi), max(0, h0[1] + h2[1] - chi))
    exact = h0[0] == h0[1] and h2[0] == h2[1]
    if exact:
        h1 = (h1[0], h1[0])
    return CohomologyBound(h0, h1, h2, exact)


def ey_family(y: int, h: int) -> ExtensionBundle:
    """The bundle on F_1 with L = C0 + (5-h)f, M = 2C0 + hf and h + y general points."""
    if h < 3 or not (-2 <= y <= 4) or h + y < 1:
        raise DomainError(f"need h >= 3, -2 <= y <= 4 and h + y >= 1, got y={y}, h={h}")
    return ExtensionBundle(
        RuledBase.hirzebruch(1),
        DivisorClass(1, 5 - h),
        DivisorClass(2, h),
        w=h + y,
        lm=1,
        general_position=True,
        label=f"E_y(y={y},h={h})",
    )


def plane_quintic_bundle() -> ExtensionBundle:
    """O(1) extended by O(4) twisted by ten general points of P2 (c1 = 5, c2 = 14)."""
    return ExtensionBundle(
        RuledBase.plane(), PlaneClass(1), PlaneClass(4), w=10, lm=1, general_position=True,
        label="P2(c1=5,c2=14)",
    )


def fibre_pair_bundle(e: int, a: int, b_l: int, b_m: int, label: Optional[str] = None) -> ExtensionBundle:
    """L = aC0 + b_l f, M = (a+2)C0 + b_m f on F_e, with W two points on one fibre."""
    return ExtensionBundle(
        RuledBase.hirzebruch(e),
        DivisorClass(a, b_l),
        DivisorClass(a + 2, b_m),
        w=2,
        lm=2,
        general_position=False,
        label=label or f"fibre-pair(e={e},a={a},b_l={b_l},b_m={b_m})",
    )
