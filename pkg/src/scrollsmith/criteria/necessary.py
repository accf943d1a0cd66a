"""Necessary conditions: failing any of them refutes very ampleness."""
from __future__ import annotations

from ..cohomology import cohomology_rational, h0_lower_bound_blown_plane
from ..divisors import BlownPlaneClass, DivisorClass
from ..verdict import DomainError, Verdict
from .report import Condition, ConditionReport, necessary

__all__ = ["check_brosius", "finalno_obstruction", "brosius_forced_classes"]

BROSIUS_SOURCE = "uniform (2,1) splitting on fibres forces a line-bundle extension; no scrolls over F_e in P^r, r <= 5"
FINALNO_SOURCE = "expected-dimension bound on a blown-up plane surface section against linear normality"


def brosius_forced_classes(e: int, t: int, k: int) -> tuple[DivisorClass, DivisorClass]:
    """Sub and quotient line bundles forced when c1 = 3C0 + tf and c2 = k."""
    return DivisorClass(2, 2 * t - 2 * e - k), DivisorClass(1, k - t + 2 * e)


def check_brosius(e: int, t: int, k: int) -> ConditionReport:
    if e < 0:
        raise DomainError(f"F_e needs e >= 0, got {e}")
    L, M = brosius_forced_classes(e, t, k)
    ample = t >= 3 * e + 1
    quotient = k + e > t
    hL = cohomology_rational(L, e)
    h0M = cohomology_rational(M, e).h0[0]
    lo = hL.h0[0] + max(0, h0M - hL.h1[0])
    hi = hL.h0[0] + h0M
    if lo >= 7:
        s_h0 = Verdict.ESTABLISHED
    elif hi < 7:
        s_h0 = Verdict.REFUTED
    else:
        s_h0 = Verdict.INCONCLUSIVE
    conditions = [
        Condition("c1 ample", Verdict.ESTABLISHED if ample else Verdict.REFUTED, f"t={t} >= 3e+1={3 * e + 1}"),
        Condition("quotient ample", Verdict.ESTABLISHED if quotient else Verdict.REFUTED, f"k+e={k + e} > t={t}"),
        Condition("h0 >= 7", s_h0, f"h0(E) in [{lo}, {hi}] for the forced extension of {M} by {L}"),
    ]
    report = necessary("brosius", conditions, source=BROSIUS_SOURCE, extras={"e": e, "t": t, "k": k})
    if report.verdict is not Verdict.REFUTED:
        report.extras["forced"] = {"L": L, "M": M}
    return report


def finalno_obstruction(x: int, n_points: int, claimed_h0: int) -> ConditionReport:
    """Compare h0 of (x+5)l - (x+1)l0 - l1 - ... - l_n with a claimed value of h0(T)."""
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x}")
    if n_points < 0:
        raise DomainError(f"number of points must be non-negative, got {n_points}")
    C = BlownPlaneClass(x + 5, (x + 1,) + (1,) * n_points)
    bound = h0_lower_bound_blown_plane(C)
    ok = bound <= claimed_h0
    cond = Condition(
        "h0 bound",
        Verdict.ESTABLISHED if ok else Verdict.REFUTED,
        f"h0({x + 5}l-{x + 1}l0-{n_points} simple points) >= {bound} vs claimed {claimed_h0}",
    )
    return necessary("finalno", [cond], source=FINALNO_SOURCE, extras={"bound": bound})
