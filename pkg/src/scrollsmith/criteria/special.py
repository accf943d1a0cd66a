"""Checks for the E_y family on F_1 and the adjoint-system test on a nine-point blow-up of P2."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from ..bundles import ey_family, restrict_to_curve, restrict_to_fibre
from ..cohomology import cohomology_rational, h1_vanishes_with_ideal
from ..divisors import C0, FIBRE, BlownPlaneClass, DivisorClass
from ..invariants import scroll_invariants
from ..verdict import DomainError, Verdict
from .report import Condition, ConditionReport, sufficient

__all__ = [
    "ReiderCandidate",
    "reider_obstructs",
    "reider_candidates",
    "reider_exceptions",
    "curve_degree_lower_bound",
    "check_restriction_props",
    "teoy_verdict",
    "QUARTIC_ADJOINT",
]

REIDER_SOURCE = "adjoint-system very ampleness on a blown-up plane, obstructed only by low-degree curves"
RESTRICTION_SOURCE = "restrictions and twisted vanishings of the E_y extension sequence on F_1"
TABLE_SOURCE = "separation arguments for E_y on F_1, tabulated"

# adjoint class for quartics through nine points of a smooth cubic
QUARTIC_ADJOINT = BlownPlaneClass(7, (2,) * 9)
REIDER_MIN_SQUARE = 10
CUBIC_SCREEN_MAX_DEGREE = 7


@dataclass(frozen=True)
class ReiderCandidate:
    shape: int
    E: BlownPlaneClass
    ME: int
    E2: int

    @property
    def obstructs(self) -> bool:
        return reider_obstructs(self.ME, self.E2)


def reider_obstructs(ME: int, E2: int) -> bool:
    """Whether an effective E with these numbers can block very ampleness of K + M."""
    return (ME == 0 and E2 in (-1, -2)) or (ME == 1 and E2 in (0, -1)) or (ME == 2 and E2 == 0)


def _validate(M: BlownPlaneClass) -> None:
    if not isinstance(M, BlownPlaneClass):
        raise DomainError(f"{M!r} is not a blown-up plane class")
    if M.d <= 0 or not M.mults:
        raise DomainError(f"need positive degree and at least one point, got {M}")


def _line_through(n: int, support) -> BlownPlaneClass:
    mults = [0] * n
    for i in support:
        mults[i] = 1
    return BlownPlaneClass(1, tuple(mults))


def _conic_through(n: int, support) -> BlownPlaneClass:
    mults = [0] * n
    for i in support:
        mults[i] = 1
    return BlownPlaneClass(2, tuple(mults))


def reider_candidates(M: BlownPlaneClass) -> Iterator[ReiderCandidate]:
    """Lines through three points, conics through six, and pairs of distinct such lines.

    Irreducible conics are smooth, so they pass simply through each point; two
    distinct lines share at most one of the blown-up points.
    """
    _validate(M)
    n = len(M.mults)
    lines = [_line_through(n, s) for s in combinations(range(n), 3)]
    for E in lines:
        ME = M.dot(E)
        if ME == 1:
            yield ReiderCandidate(1, E, ME, E.self_intersection)
    for s in combinations(range(n), 6):
        E = _conic_through(n, s)
        ME = M.dot(E)
        if ME == 2:
            yield ReiderCandidate(2, E, ME, E.self_intersection)
    supports = [set(s) for s in combinations(range(n), 3)]
    for i, j in combinations(range(len(lines)), 2):
        if len(supports[i] & supports[j]) > 1:
            continue
        E1, E2 = lines[i], lines[j]
        if M.dot(E1) != 1 or M.dot(E2) != 1:
            continue
        E = BlownPlaneClass(2, tuple(p + q for p, q in zip(E1.mults, E2.mults)))
        yield ReiderCandidate(3, E, M.dot(E), E.self_intersection)


def curve_degree_lower_bound(M: BlownPlaneClass, a: int) -> int:
    """min M.gamma over gamma = a l - sum a_i l_i with 0 <= a_i <= a and sum a_i <= 3a.

    The maximum of sum m_i a_i under these constraints puts a on each of the
    three largest multiplicities.
    """
    if a < 1:
        raise DomainError("curve degree must be positive")
    top = sorted(M.mults, reverse=True)[:3]
    return a * (M.d - sum(top))


def reider_exceptions(M: BlownPlaneClass) -> ConditionReport:
    _validate(M)
    n = len(M.mults)
    M2 = M.self_intersection
    conditions = [
        Condition(
            "M^2 >= 10",
            Verdict.ESTABLISHED if M2 >= REIDER_MIN_SQUARE else Verdict.REFUTED,
            f"M^2 = {M2}" + ("" if M2 >= REIDER_MIN_SQUARE else "; the adjoint criterion is inapplicable"),
        )
    ]

    low = [curve_degree_lower_bound(M, a) for a in range(1, CUBIC_SCREEN_MAX_DEGREE + 1)]
    exceptional_ok = all(m >= 1 for m in M.mults)
    curves_ok = all(v >= a for a, v in enumerate(low, start=1))
    ample = exceptional_ok and curves_ok and M2 > 0
    conditions.append(
        Condition(
            "M ample",
            Verdict.ESTABLISHED if ample else Verdict.INCONCLUSIVE,
            f"M.l_i = {min(M.mults)}..{max(M.mults)}; min M.gamma for degrees 1..{CUBIC_SCREEN_MAX_DEGREE}: {low}",
        )
    )

    by_shape: dict[int, list[ReiderCandidate]] = {1: [], 2: [], 3: []}
    for cand in reider_candidates(M):
        by_shape[cand.shape].append(cand)
    names = {1: "lines through 3 points", 2: "conics through 6 points", 3: "pairs of such lines"}
    for shape, cands in by_shape.items():
        blocking = [c for c in cands if c.obstructs]
        squares = sorted({c.E2 for c in cands})
        conditions.append(
            Condition(
                f"shape {shape}",
                Verdict.ESTABLISHED if not blocking else Verdict.INCONCLUSIVE,
                f"{len(cands)} {names[shape]}, E^2 values {squares}, {len(blocking)} blocking",
            )
        )

    if M.d % 3 == 0 and all(m % 3 == 0 for m in M.mults):
        third = BlownPlaneClass(M.d // 3, tuple(m // 3 for m in M.mults))
        s3 = Verdict.INCONCLUSIVE if third.self_intersection == 1 else Verdict.ESTABLISHED
        detail = f"M = 3E with E^2 = {third.self_intersection}"
    else:
        s3, detail = Verdict.ESTABLISHED, "M is not divisible by 3"
    conditions.append(Condition("M = 3E", s3, detail))

    complete = M == QUARTIC_ADJOINT
    conditions.append(
        Condition(
            "shape list complete",
            Verdict.ESTABLISHED if complete else Verdict.INCONCLUSIVE,
            "the three shapes exhaust effective E with M.E <= 2 for 7l - 2(l_0+...+l_8)"
            if complete
            else "the three shapes are only known to be exhaustive for 7l - 2(l_0+...+l_8)",
        )
    )
    extras = {
        "M2": M2,
        "counts": {str(k): len(v) for k, v in by_shape.items()},
        "support_counts": {"1": comb(n, 3), "2": comb(n, 6)},
        "max_E2": max((c.E2 for v in by_shape.values() for c in v), default=None),
    }
    return sufficient("reider", conditions, source=REIDER_SOURCE, extras=extras)


def _check_range(y: int, h: int) -> None:
    if h not in (3, 4) or not (-2 <= y <= 4):
        raise DomainError(f"need h in {{3, 4}} and -2 <= y <= 4, got y={y}, h={h}")


def _twist_vanishing(E, B: DivisorClass) -> tuple[Verdict, str]:
    """h1(E_y(-B)) = 0 from h1(L - B) = 0 and the general-position vanishing for M - B."""
    LB, MB = E.L - B, E.M - B
    h1L = cohomology_rational(LB, 1).h1[0]
    sM = h1_vanishes_with_ideal(MB, E.w, E.base)
    h0M = cohomology_rational(MB, 1).h0[0]
    ok = h1L == 0 and sM is Verdict.ESTABLISHED
    return (
        Verdict.ESTABLISHED if ok else Verdict.INCONCLUSIVE,
        f"h1({LB})={h1L}; h0({MB})={h0M} >= w={E.w}: {sM.value}",
    )


def check_restriction_props(y: int, h: int) -> ConditionReport:
    _check_range(y, h)
    E = ey_family(y, h)
    gamma = C0 + FIBRE
    conditions = []

    fibres = [restrict_to_fibre(E, eps) for eps in range(0, min(1, E.effective_lm) + 1)]
    conditions.append(
        Condition(
            "i",
            Verdict.ESTABLISHED if all(s.very_ample for s in fibres) else Verdict.INCONCLUSIVE,
            "fibre edge degrees " + ", ".join(str(s.degrees) for s in fibres),
        )
    )

    s, d = _twist_vanishing(E, FIBRE)
    conditions.append(Condition("ii/iii", s, f"h1(E(-f)) = 0: {d}"))

    sc = restrict_to_curve(E, C0, 0)
    if sc.very_ample:
        status, note = Verdict.ESTABLISHED, ""
    elif sc.not_very_ample_certain:
        status, note = Verdict.REFUTED, ""
    else:
        status, note = Verdict.INCONCLUSIVE, "; splitting O+O(2) not excluded (tautological map may contract C0)"
    conditions.append(Condition("iv/v", status, f"C0 edge degrees {sc.degrees}{note}"))

    s, d = _twist_vanishing(E, C0)
    conditions.append(Condition("vi", s, f"h1(E(-C0)) = 0: {d}"))

    gammas = [restrict_to_curve(E, gamma, eps) for eps in range(0, min(2, E.w) + 1)]
    conditions.append(
        Condition(
            "vii",
            Verdict.ESTABLISHED if all(g.very_ample for g in gammas) else Verdict.INCONCLUSIVE,
            "C0+f edge degrees " + ", ".join(str(g.degrees) for g in gammas),
        )
    )

    s, d = _twist_vanishing(E, gamma)
    conditions.append(Condition("viii/ix", s, f"h1(E(-C0-f)) = 0: {d}"))
    return sufficient("restriction", conditions, source=RESTRICTION_SOURCE, extras={"y": y, "h": h, "w": E.w})


def teoy_verdict(y: int, h: int) -> ConditionReport:
    if h < 3 or not (-2 <= y <= 4):
        raise DomainError(f"need h >= 3 and -2 <= y <= 4, got y={y}, h={h}")
    extras: dict = {"y": y, "h": h}
    notes: list[str] = []
    if h in (3, 4):
        evidence = check_restriction_props(y, h)
        extras["restriction"] = {c.name: c.status.value for c in evidence.conditions}
        extras["invariants"] = scroll_invariants(ey_family(y, h))
        notes.append("restriction evidence is attached but does not certify very ampleness by itself")

    if (h == 3 and -2 <= y <= 2) or (h == 4 and y == 3):
        verdict = Verdict.ESTABLISHED
        detail = "very ample by separation along |T - S_1| and curve sections"
    elif y == 4 and h in (3, 4, 5):
        verdict = Verdict.NOT_VERY_AMPLE_BY_CITED_ARGUMENT
        detail = "an elliptic curve C in the surface section has deg(T|C) = 2, so T|C is not very ample"
        if h == 5:
            notes.append("no numerical evidence is computed for h = 5")
    else:
        verdict = Verdict.INCONCLUSIVE
        detail = "outside the tabulated cases"
    cond = Condition("table", verdict, detail)
    return ConditionReport("teoy", [cond], verdict, source=TABLE_SOURCE, extras=extras, notes=notes)
