from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollsmith.cohomology import (
    CohomologyBound,
    cohomology,
    cohomology_plane,
    cohomology_rational,
    general_position_surjective,
    h0_lower_bound_blown_plane,
    h0_oracle_lattice,
    h1_vanishes,
    h1_vanishes_elliptic,
    h1_vanishes_with_ideal,
    ideal_h0_interval,
    imposes_independent_conditions,
)
from scrollsmith.divisors import (
    BlownPlaneClass,
    DivisorClass,
    PlaneClass,
    RuledBase,
    canonical_class,
    euler_characteristic,
)
from scrollsmith.verdict import DomainError, Verdict

F1 = RuledBase.hirzebruch(1)


def polygon_points(a, b, e):
    # sections of aC0 + bf on the toric surface F_e: lattice points of
    # {(u, v) : 0 <= u, 0 <= v <= a, u <= b - e*(a - v)} after a change of chart
    return sum(1 for v in range(a + 1) for u in range(0, max(b, 0) + 1) if u <= b - e * (a - v))


class TestRationalFrozen:
    @pytest.mark.parametrize(
        "a,b,e,expected",
        [
            (0, 0, 1, (1, 0, 0)),
            (1, 3, 1, (7, 0, 0)),
            (2, 3, 1, (9, 0, 0)),
            (-1, 5, 1, (0, 0, 0)),
            (0, -2, 1, (0, 1, 0)),
            (1, 0, 3, (1, 2, 0)),
            (-2, -3, 1, (0, 0, 1)),
            (3, 9, 1, (34, 0, 0)),
            (2, 4, 1, (12, 0, 0)),
        ],
    )
    def test_values(self, a, b, e, expected):
        assert cohomology_rational(DivisorClass(a, b), e).values == expected

    def test_plane(self):
        assert cohomology_plane(3).values == (10, 0, 0)
        assert cohomology_plane(-3).values == (0, 0, 1)
        assert cohomology_plane(-5).values == (0, 0, 6)
        assert cohomology(PlaneClass(4), RuledBase.plane()).values == (15, 0, 0)

    def test_negative_e_rejected(self):
        with pytest.raises(DomainError):
            cohomology_rational(DivisorClass(1, 1), -1)
        with pytest.raises(DomainError):
            cohomology(DivisorClass(1, 1), RuledBase.elliptic(0, True))


class TestRationalProperties:
    @given(st.integers(-12, 12), st.integers(-12, 12), st.integers(0, 4))
    def test_lattice_oracles(self, a, b, e):
        D = DivisorClass(a, b)
        h0 = cohomology_rational(D, e).h0[0]
        assert h0 == h0_oracle_lattice(D, e)
        if a >= 0:
            assert h0 == polygon_points(a, b, e)

    @given(st.integers(-12, 12), st.integers(-12, 12), st.integers(0, 4))
    def test_chi_and_serre(self, a, b, e):
        D = DivisorClass(a, b)
        Y = RuledBase.hirzebruch(e)
        h0, h1, h2 = cohomology_rational(D, e).values
        assert h0 - h1 + h2 == euler_characteristic(D, Y)
        d0, d1, d2 = cohomology_rational(canonical_class(Y) - D, e).values
        assert (h0, h1, h2) == (d2, d1, d0)

    @given(st.integers(0, 8), st.integers(-12, 12), st.integers(0, 4))
    def test_h1_from_chi_matches_pushforward(self, a, b, e):
        # independent route: h1 = h0 + h2 - chi with h2 = 0 for a >= 0
        D = DivisorClass(a, b)
        chi = euler_characteristic(D, RuledBase.hirzebruch(e))
        assert cohomology_rational(D, e).h1[0] == polygon_points(a, b, e) - chi


class TestPlaneProperties:
    @given(st.integers(-30, 30))
    def test_serre_and_chi(self, d):
        h0, h1, h2 = cohomology_plane(d).values
        assert h1 == 0
        assert (d + 1) * (d + 2) // 2 == h0 - h1 + h2
        assert cohomology_plane(-3 - d).values == (h2, h1, h0)


class TestBounds:
    def test_interval_validation(self):
        with pytest.raises(ValueError):
            CohomologyBound((2, 1), (0, 0), (0, 0), False)
        with pytest.raises(ValueError):
            CohomologyBound((1, 2), (0, 0), (0, 0), True)
        with pytest.raises(DomainError):
            _ = CohomologyBound((1, 2), (0, 0), (0, 0), False).values

    def test_chi_consistent(self):
        B = CohomologyBound((3, 5), (0, 1), (0, 0), False)
        assert B.chi_consistent(2) and B.chi_consistent(5)
        assert not B.chi_consistent(6)


class TestVanishing:
    def test_exact_bases(self):
        assert h1_vanishes(DivisorClass(1, 3), F1) is Verdict.ESTABLISHED
        assert h1_vanishes(DivisorClass(0, -2), F1) is Verdict.REFUTED
        assert h1_vanishes(PlaneClass(-1), RuledBase.plane()) is Verdict.ESTABLISHED

    def test_elliptic(self):
        E0 = RuledBase.elliptic(0, True)
        assert h1_vanishes_elliptic(DivisorClass(1, 1), E0) is Verdict.ESTABLISHED
        assert h1_vanishes_elliptic(DivisorClass(1, 0), E0) is Verdict.INCONCLUSIVE
        assert h1_vanishes_elliptic(DivisorClass(-1, 7), E0) is Verdict.ESTABLISHED
        with pytest.raises(DomainError):
            h1_vanishes_elliptic(DivisorClass(1, 1), F1)

    def test_higher_genus_is_inconclusive(self):
        assert h1_vanishes(DivisorClass(1, 40), RuledBase.genus(2, -2)) is Verdict.INCONCLUSIVE

    def test_with_ideal(self):
        # h0(2C0 + 4f) = 12 on F_1
        assert h1_vanishes_with_ideal(DivisorClass(2, 4), 12, F1) is Verdict.ESTABLISHED
        assert h1_vanishes_with_ideal(DivisorClass(2, 4), 13, F1) is Verdict.INCONCLUSIVE
        assert h1_vanishes_with_ideal(DivisorClass(2, 1), 0, F1) is Verdict.INCONCLUSIVE
        with pytest.raises(DomainError):
            h1_vanishes_with_ideal(DivisorClass(2, 4), -1, F1)
        with pytest.raises(DomainError):
            h1_vanishes_with_ideal(DivisorClass(2, 4), 1, RuledBase.hirzebruch(2))

    @given(st.integers(0, 6), st.integers(1, 14), st.integers(0, 40))
    def test_with_ideal_implies_plain_vanishing(self, a, b, w):
        D = DivisorClass(a, b)
        if h1_vanishes_with_ideal(D, w, F1) is Verdict.ESTABLISHED:
            assert cohomology_rational(D, 1).h1[0] == 0
            assert cohomology_rational(D, 1).h0[0] >= w


class TestIndependentConditions:
    def test_general_points(self):
        D = DivisorClass(0, 1)
        assert imposes_independent_conditions(D, 2, F1) is Verdict.ESTABLISHED
        assert imposes_independent_conditions(D, 3, F1) is Verdict.INCONCLUSIVE
        assert imposes_independent_conditions(D, 0, F1, general_position=False) is Verdict.ESTABLISHED

    def test_fibre_route(self):
        # two points on one fibre impose independent conditions on 3C0 + 8f
        D = DivisorClass(3, 8)
        assert imposes_independent_conditions(D, 2, F1, general_position=False, lm=2) is Verdict.ESTABLISHED
        assert imposes_independent_conditions(D, 2, F1, general_position=False, lm=1) is Verdict.INCONCLUSIVE
        # D.f = 0 cannot separate two points of a fibre
        assert imposes_independent_conditions(DivisorClass(0, 5), 2, F1, general_position=False, lm=2) is Verdict.INCONCLUSIVE

    def test_surjective_requires_h1(self):
        D = DivisorClass(0, -2)
        assert general_position_surjective(D, 0, F1) is Verdict.ESTABLISHED
        assert general_position_surjective(D, 1, F1) is Verdict.INCONCLUSIVE

    def test_ideal_interval(self):
        assert ideal_h0_interval(DivisorClass(2, 4), 3, F1) == (9, 9, True)
        assert ideal_h0_interval(DivisorClass(0, 1), 5, F1) == (0, 0, True)
        lo, hi, exact = ideal_h0_interval(DivisorClass(0, 5), 2, F1, general_position=False, lm=2)
        assert (lo, hi, exact) == (4, 6, False)

    @given(st.integers(0, 5), st.integers(0, 10), st.integers(0, 12), st.booleans())
    def test_interval_sound(self, a, b, w, gp):
        D = DivisorClass(a, b)
        h0 = cohomology_rational(D, 1).h0[0]
        lo, hi, exact = ideal_h0_interval(D, w, F1, general_position=gp, lm=max(w, 1))
        assert 0 <= lo <= hi <= h0
        assert lo >= h0 - w
        assert exact == (lo == hi)


class TestBlownPlane:
    def test_values(self):
        assert h0_lower_bound_blown_plane(BlownPlaneClass(3, (1,) * 6)) == 4
        assert h0_lower_bound_blown_plane(BlownPlaneClass(7, (2,) * 9)) == 9
        assert h0_lower_bound_blown_plane(BlownPlaneClass(1, (1,) * 5)) == 0
        with pytest.raises(DomainError):
            h0_lower_bound_blown_plane(BlownPlaneClass(-1, ()))

    @given(st.integers(0, 20), st.lists(st.integers(0, 5), max_size=12))
    def test_monotone_in_points(self, d, mults):
        C = BlownPlaneClass(d, tuple(mults))
        fewer = BlownPlaneClass(d, tuple(mults[:-1]))
        assert h0_lower_bound_blown_plane(C) <= h0_lower_bound_blown_plane(fewer)
        assert h0_lower_bound_blown_plane(C) <= comb(d + 2, 2)
