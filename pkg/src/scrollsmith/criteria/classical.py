"""Lifting-of-sections criteria: the h1 hypothesis of the surface-section
criterion, the smooth-member test for |T + A|, and the curve-section
criterion for line bundles on an arbitrary smooth surface.
"""
from __future__ import annotations

from ..bundles import ExtensionBundle, h0_bundle_twist
from ..cohomology import cohomology, general_position_surjective, h1_vanishes
from ..divisors import (
    AnyClass,
    DivisorClass,
    PlaneClass,
    RuledBase,
    arithmetic_genus,
    embedded_lines,
    intersect,
    is_very_ample,
)
from ..verdict import DomainError, Verdict
from .report import Condition, ConditionReport, sufficient

__all__ = ["check_prop_uno_b", "check_prop_due", "check_prop_cinque", "due_b_candidates"]

UNO_SOURCE = "lifting separating sections from a surface section S in |eps T + A|"
DUE_SOURCE = "smooth members of |T + A| through every length-2 subscheme"
CINQUE_SOURCE = "lifting separating sections from smooth curves in |zA|"


def check_prop_uno_b(E: ExtensionBundle, A: AnyClass, eps: int) -> ConditionReport:
    """h1(X, (1 - eps)T - A) = 0, read on Y."""
    if eps not in (0, 1):
        raise DomainError(f"eps must be 0 or 1, got {eps}")
    base = E.base
    if eps == 1:
        status = h1_vanishes(-A, base)
        cond = Condition("b", status, f"h1(Y, {-A}) = 0: {status.value}")
        return sufficient("uno-b", [cond], source=UNO_SOURCE, extras={"eps": 1})
    LA, MA = E.L - A, E.M - A
    s_l = h1_vanishes(LA, base)
    s_m = general_position_surjective(
        MA, E.w, base, general_position=E.general_position, lm=E.effective_lm or None
    )
    conditions = [
        Condition("b.L", s_l, f"h1(Y, {LA}) = 0: {s_l.value}"),
        Condition("b.M", s_m, f"h1(Y, {MA} (x) I_W) = 0 with w={E.w}: {s_m.value}"),
    ]
    return sufficient("uno-b", conditions, source=UNO_SOURCE, extras={"eps": 0})


def _subtract_box(base: RuledBase, A: AnyClass, L: AnyClass, M: AnyClass):
    """All B with A - B coefficientwise effective and h0(L+B) + h0(M+B) possibly nonzero."""
    if base.is_plane:
        top = max(L.d + A.d, M.d + A.d)
        for p in range(0, max(top, -1) + 1):
            yield p, A - PlaneClass(p)
        return
    LA, MA = L + A, M + A
    p_top = max(LA.a, MA.a)
    q_top = max(LA.b, MA.b)
    # for p > p_top both C0-coefficients are negative; for q > q_top both f-coefficients are
    for p in range(0, max(p_top, -1) + 1):
        for q in range(0, max(q_top, -1) + 1):
            yield (p, q), A - DivisorClass(p, q)


def due_b_candidates(E: ExtensionBundle, A: AnyClass) -> list[tuple[AnyClass, int, int, int]]:
    """(B, h0(E(B)) lower, upper, h0(A - B)) for every B with possibly effective T + B, B != A."""
    out = []
    for _, B in _subtract_box(E.base, A, E.L, E.M):
        if B == A:
            continue
        bound = h0_bundle_twist(E, B)
        if bound.h0[1] == 0:
            continue
        out.append((B, bound.h0[0], bound.h0[1], cohomology(A - B, E.base).h0[0]))
    return out


def check_prop_due(E: ExtensionBundle, A: AnyClass, search_bound: int = 64) -> ConditionReport:
    base = E.base
    if not (base.is_rational or base.is_plane):
        raise DomainError(f"needs F_e or P2, got {base.label}")
    D = h0_bundle_twist(E, A)
    lo, hi = D.h0
    if lo > 3:
        sa = Verdict.ESTABLISHED
    elif hi <= 3:
        sa = Verdict.REFUTED
    else:
        sa = Verdict.INCONCLUSIVE
    conditions = [Condition("a", sa, f"h0(X, T+A) in [{lo}, {hi}] > 3")]

    candidates = due_b_candidates(E, A)
    too_far = [B for B, *_ in candidates if _distance(A, B) > search_bound]
    worst = None
    sb = Verdict.ESTABLISHED
    for B, b_lo, b_hi, hAB in candidates:
        if max(b_hi, hAB) < lo - 2:
            continue
        if b_lo > 0 and max(b_lo, hAB) >= hi - 2:
            sb = Verdict.REFUTED
            worst = (B, b_lo, b_hi, hAB)
            break
        if sb is Verdict.ESTABLISHED:
            sb = Verdict.INCONCLUSIVE
            worst = (B, b_lo, b_hi, hAB)
    if too_far and sb is Verdict.ESTABLISHED:
        sb = Verdict.INCONCLUSIVE
    if worst is None:
        detail = f"{len(candidates)} classes B scanned, all max(h0(T+B), h0(A-B)) < {lo - 2}"
    else:
        B, b_lo, b_hi, hAB = worst
        detail = f"B={B}: h0(T+B) in [{b_lo}, {b_hi}], h0(A-B)={hAB} against h0(X,D)-2 in [{lo - 2}, {hi - 2}]"
    if too_far:
        detail += f"; {len(too_far)} classes beyond search bound {search_bound}"
    conditions.append(Condition("b", sb, detail))
    notes = ["B = A is skipped: A - B must be a nonzero effective divisor for the reducible case"]
    return sufficient(
        "due", conditions, source=DUE_SOURCE, notes=notes,
        extras={"h0_D": [lo, hi], "candidates": len(candidates)},
    )


def _distance(A: AnyClass, B: AnyClass) -> int:
    diff = A - B
    return diff.d if isinstance(diff, PlaneClass) else max(diff.a, diff.b)


def check_prop_cinque(base: RuledBase, D: AnyClass, A: AnyClass, z: int) -> ConditionReport:
    if z < 1:
        raise DomainError(f"z={z} must be positive")
    zA = z * A
    va = is_very_ample(zA, base)
    conditions = [Condition("0", va, f"{zA} very ample: {va.value}")]

    if va is not Verdict.ESTABLISHED:
        c1 = Condition("1", Verdict.INCONCLUSIVE, "no certified embedding by |zA|")
    elif base.is_plane:
        c1 = Condition("1", Verdict.ESTABLISHED, "plane curves of a fixed degree through two points: general member smooth")
    else:
        lines = embedded_lines(zA, base)
        if lines:
            names = ", ".join(str(l) for l in lines)
            # a hyperplane through two points of an embedded line contains it
            c1 = Condition("1", Verdict.REFUTED, f"|zA| embeds lines ({names}); members through two of their points are reducible")
        else:
            c1 = Condition("1", Verdict.ESTABLISHED, "|zA| very ample with no embedded lines")
    conditions.append(c1)

    DA = intersect(D, A, base)
    AA = intersect(A, A, base)
    pa = arithmetic_genus(A, base)
    rhs = (z - 1) * AA + 2 * pa + 1
    conditions.append(Condition("2", Verdict.ESTABLISHED if DA >= rhs else Verdict.REFUTED,
                                f"D.A={DA} >= (z-1)A^2+2p_a(A)+1={rhs}"))

    R = D - zA
    s3 = h1_vanishes(R, base)
    conditions.append(Condition("3", s3, f"h1({R}) = 0: {s3.value}"))
    return sufficient("cinque", conditions, source=CINQUE_SOURCE,
                      extras={"DA": DA, "A2": AA, "pa_A": pa})
