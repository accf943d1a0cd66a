"""Numerical very-ampleness criteria on F_e and on elliptic ruled surfaces.

Both criteria restrict E to the curves of |z(C0 + xf)| and |z(C0 + xf) + f|
and lift separating sections through vanishing of h1 of the twisted
extension sequence.  A witness is a pair (x, z).
"""
from __future__ import annotations

from typing import Optional

from ..bundles import ExtensionBundle, nontrivial_extension
from ..cohomology import cohomology_rational, general_position_surjective, h1_vanishes_elliptic
from ..divisors import FIBRE, DivisorClass, intersect, is_very_ample
from ..verdict import DomainError, Verdict
from .necessary import check_brosius
from .report import Condition, ConditionReport, sufficient

__all__ = [
    "check_valma",
    "search_valma_witness",
    "check_valmae",
    "search_valmae_witness",
    "default_x_max",
    "DEFAULT_Z_MAX",
]

RATIONAL_SOURCE = "restriction to curves in |C0+xf| on F_e with lifting through h1 vanishing"
ELLIPTIC_SOURCE = "restriction to elliptic curves in |C0+xf| on an elliptic ruled surface"

DEFAULT_X_SPAN = 20
DEFAULT_Z_MAX = 12


def default_x_max(e: int) -> int:
    return e + DEFAULT_X_SPAN


def _yes(ok: bool) -> Verdict:
    return Verdict.ESTABLISHED if ok else Verdict.REFUTED


def _both(*statuses: Verdict) -> Verdict:
    if all(s is Verdict.ESTABLISHED for s in statuses):
        return Verdict.ESTABLISHED
    if any(s is Verdict.REFUTED for s in statuses):
        return Verdict.REFUTED
    return Verdict.INCONCLUSIVE


def _h1_zero_rational(D: DivisorClass, e: int) -> tuple[Verdict, int]:
    h1 = cohomology_rational(D, e).h1[0]
    return _yes(h1 == 0), h1


def _surjective(E: ExtensionBundle, D: DivisorClass) -> Verdict:
    return general_position_surjective(
        D, E.w, E.base, general_position=E.general_position, lm=E.effective_lm or None
    )


def _require_extension(E: ExtensionBundle) -> None:
    status = nontrivial_extension(E)
    if status is not Verdict.ESTABLISHED:
        reason = "h1(L-M) = 0" if status is Verdict.REFUTED else "h1(L-M) > 0 is not certified"
        raise DomainError(f"w = 0 and {reason}: no non-split extension of M by L to test")


def _fibre_condition(E: ExtensionBundle) -> Condition:
    Lf = intersect(E.L, FIBRE, E.base)
    Mf = intersect(E.M, FIBRE, E.base)
    lm = E.effective_lm
    return Condition("2", _yes(Lf > 0 and Mf > lm), f"L.f={Lf} > 0, M.f={Mf} > lm={lm}")


def _shared_conditions(E: ExtensionBundle, x: int, z: int, h1_zero) -> list[Condition]:
    """Conditions 2 to 5, identical in both settings up to the vanishing test."""
    H = DivisorClass(1, x)
    zH = z * H
    Lz, Mz = E.L - zH, E.M - zH
    Lzf, Mzf = Lz - FIBRE, Mz - FIBRE
    s3l, d3l = h1_zero(Lz)
    s3m, d3m = h1_zero(Mz)
    s4l, d4l = h1_zero(Lzf)
    s4m, d4m = h1_zero(Mzf)
    s5a = _surjective(E, Mz)
    s5b = _surjective(E, Mzf)
    return [
        _fibre_condition(E),
        Condition("3", _both(s3l, s3m), f"h1({Lz}) {d3l}, h1({Mz}) {d3m}"),
        Condition("4", _both(s4l, s4m), f"h1({Lzf}) {d4l}, h1({Mzf}) {d4m}"),
        Condition(
            "5",
            _both(s5a, s5b),
            f"w={E.w} points on |{Mz}|: {s5a.value}; on |{Mzf}|: {s5b.value}",
        ),
    ]


def _necessary_screen(E: ExtensionBundle) -> Optional[Condition]:
    """Cross-check against the fibre-splitting necessary test when c1.f = 3.

    Conditions 1-6 with z >= 2 are satisfied by some bundles that this test
    refutes, so a certificate must not contradict it.
    """
    c1 = E.c1
    if c1.a != 3:
        return None
    report = check_brosius(E.base.e, c1.b, E.c2)
    failed = [c.name for c in report.conditions if c.status is Verdict.REFUTED]
    if failed:
        return Condition("screen", Verdict.REFUTED, f"c1={c1}, c2={E.c2} fails the necessary test: {', '.join(failed)}")
    return Condition("screen", Verdict.ESTABLISHED, f"c1={c1}, c2={E.c2} passes the necessary test")


def check_valma(E: ExtensionBundle, x: int, z: int) -> ConditionReport:
    base = E.base
    if not base.is_rational:
        raise DomainError(f"this criterion needs a Hirzebruch surface, got {base.label}")
    e = base.e
    if x < e + 2:
        raise DomainError(f"x={x} must be at least e+2={e + 2}")
    if z < 1:
        raise DomainError(f"z={z} must be positive")
    _require_extension(E)
    H = DivisorClass(1, x)
    LH = intersect(E.L, H, base)
    MH = intersect(E.M, H, base)

    def h1_zero(D: DivisorClass):
        status, h1 = _h1_zero_rational(D, e)
        return status, f"= {h1}"

    conditions = [Condition("1", _yes(LH > 0 and MH > 2), f"L.H={LH} > 0, M.H={MH} > 2 for H=C0+{x}f")]
    conditions += _shared_conditions(E, x, z, h1_zero)
    lhs = intersect(E.c1, H, base)
    rhs = 2 * (z - 1) * (2 * x - e)
    conditions.append(Condition("6", _yes(lhs >= rhs), f"(L+M).H={lhs} >= 2(z-1)(2x-e)={rhs}"))
    screen = _necessary_screen(E)
    if screen is not None:
        conditions.append(screen)
    return sufficient("valma", conditions, source=RATIONAL_SOURCE, witness=(x, z))


def check_valmae(E: ExtensionBundle, x: int, z: int) -> ConditionReport:
    base = E.base
    if not base.is_elliptic:
        raise DomainError(f"this criterion needs an elliptic ruled surface, got {base.label}")
    if z < 1:
        raise DomainError(f"z={z} must be positive")
    e = base.e
    if not (isinstance(E.L, DivisorClass) and isinstance(E.M, DivisorClass)):
        raise DomainError("L and M must be ruled-surface classes")
    _require_extension(E)

    s0 = x + base.mu_minus
    va = is_very_ample(DivisorClass(1, x), base)
    threshold = "> 1" if base.normalized_degree_one else ">= 3"
    c0 = Condition("0", _yes(va is Verdict.ESTABLISHED), f"x + mu_minus = {s0} {threshold}")

    dl = x * E.L.a + E.L.b - E.L.a * e
    dm = x * E.M.a + E.M.b - E.M.a * e - 2
    c1 = Condition("1", _yes(min(dl, dm) >= 3), f"min({dl}, {dm}) >= 3")

    def h1_zero(D: DivisorClass):
        status = h1_vanishes_elliptic(D, base)
        return status, f"slope test {status.value}"

    shared = _shared_conditions(E, x, z, h1_zero)
    lhs = (E.L.a + E.M.a) * (x - e) + E.L.b + E.M.b
    rhs = 2 * (z - 1) * ((2 * x - e) + 1) + 2
    c6 = Condition("6", _yes(lhs >= rhs), f"(a_l+a_m)(x-e)+b_l+b_m={lhs} >= {rhs}")
    return sufficient("valmae", [c0, c1, *shared, c6], source=ELLIPTIC_SOURCE, witness=(x, z))


def _scan(check, E: ExtensionBundle, xs: range, z_max: int) -> Optional[ConditionReport]:
    if nontrivial_extension(E) is not Verdict.ESTABLISHED:
        return None
    for x in xs:
        for z in range(1, z_max + 1):
            report = check(E, x, z)
            if report.status("2") is not Verdict.ESTABLISHED:
                return None  # condition 2 does not depend on (x, z)
            if report.established:
                return report
    return None


def search_valma_witness(
    E: ExtensionBundle, x_max: Optional[int] = None, z_max: int = DEFAULT_Z_MAX
) -> Optional[ConditionReport]:
    """First (x, z) in lexicographic order for which ``check_valma`` is Established."""
    e = E.base.e
    x_max = default_x_max(e) if x_max is None else x_max
    return _scan(check_valma, E, range(e + 2, x_max + 1), z_max)


def search_valmae_witness(
    E: ExtensionBundle, x_max: Optional[int] = None, z_max: int = DEFAULT_Z_MAX, x_min: Optional[int] = None
) -> Optional[ConditionReport]:
    e = E.base.e
    # below e + 1 the class C0 + xf is not even ample
    x_min = e + 1 if x_min is None else x_min
    x_max = default_x_max(e) if x_max is None else x_max
    return _scan(check_valmae, E, range(x_min, x_max + 1), z_max)
