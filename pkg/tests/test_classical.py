import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollsmith.bundles import (
    ey_family,
    fibre_pair_bundle,
    h0_bundle_twist,
    make_extension_bundle,
    plane_quintic_bundle,
)
from scrollsmith.criteria import check_prop_cinque, check_prop_due, check_prop_uno_b
from scrollsmith.criteria.classical import due_b_candidates
from scrollsmith.divisors import DivisorClass, PlaneClass, RuledBase
from scrollsmith.verdict import DomainError, Verdict

F1 = RuledBase.hirzebruch(1)
G2 = RuledBase.genus(2, -2)
E = Verdict.ESTABLISHED


class TestUnoB:
    def test_plane_quintic(self):
        report = check_prop_uno_b(plane_quintic_bundle(), PlaneClass(1), 0)
        assert report.verdict is E
        assert "O(3) (x) I_W" in report.conditions[1].detail

    def test_eps_one(self):
        E_ = fibre_pair_bundle(1, 1, -1, 9)
        assert check_prop_uno_b(E_, DivisorClass(0, 0), 1).verdict is E
        assert check_prop_uno_b(E_, DivisorClass(1, 2), 1).verdict is E
        # -A = 3f has h1 = 0 but -A = -3f has h1 = 2
        assert check_prop_uno_b(E_, DivisorClass(0, 3), 1).verdict is Verdict.INCONCLUSIVE
        assert check_prop_uno_b(E_, DivisorClass(0, 3), 1).status("b") is Verdict.REFUTED

    def test_bad_eps(self):
        with pytest.raises(DomainError):
            check_prop_uno_b(plane_quintic_bundle(), PlaneClass(1), 2)

    def test_too_many_points(self):
        # O(3) has 10 sections: 11 general points leave h1(O(3) I_W) = 1
        bundle = make_extension_bundle(RuledBase.plane(), PlaneClass(1), PlaneClass(4), w=11)
        assert check_prop_uno_b(bundle, PlaneClass(1), 0).verdict is Verdict.INCONCLUSIVE


class TestDue:
    def test_plane_quintic(self):
        report = check_prop_due(plane_quintic_bundle(), PlaneClass(1))
        assert report.status("a") is E
        assert report.extras["h0_D"] == [17, 17]
        assert report.verdict is E

    def test_candidates_skip_a(self):
        A = PlaneClass(1)
        cands = due_b_candidates(plane_quintic_bundle(), A)
        assert [c[0] for c in cands] == [PlaneClass(0), PlaneClass(-1)]
        # h0(E) = 8, h0(E(-1)) = 1; h0(O(1)) = 3, h0(O(2)) = 6
        assert [(c[1], c[2], c[3]) for c in cands] == [(8, 8, 3), (1, 1, 6)]
        assert all(c[0] != A for c in cands)

    def test_ey_bundle(self):
        report = check_prop_due(ey_family(3, 4), DivisorClass(0, 0))
        assert report.extras["h0_D"] == [8, 8]
        assert report.verdict is E

    def test_small_h0_fails_a(self):
        bundle = make_extension_bundle(F1, DivisorClass(0, 0), DivisorClass(0, 1))
        report = check_prop_due(bundle, DivisorClass(0, 0))
        assert report.status("a") is Verdict.REFUTED
        assert report.verdict is Verdict.INCONCLUSIVE

    def test_rejects_elliptic(self):
        bundle = make_extension_bundle(RuledBase.elliptic(0, True), DivisorClass(1, 3), DivisorClass(1, 3))
        with pytest.raises(DomainError):
            check_prop_due(bundle, DivisorClass(0, 0))

    @given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 4), st.integers(0, 2), st.integers(0, 6),
           st.integers(0, 2), st.integers(0, 3))
    def test_candidate_box_is_complete(self, e, aL, bL, dM, bM, p, q):
        # every B with A - B effective and h0(E(B)) possibly nonzero is listed
        base = RuledBase.hirzebruch(e)
        bundle = make_extension_bundle(base, DivisorClass(aL, bL), DivisorClass(aL + dM, bM))
        A = DivisorClass(p, q)
        listed = {c[0] for c in due_b_candidates(bundle, A)}
        for i in range(0, 12):
            for j in range(0, 20):
                B = A - DivisorClass(i, j)
                if B == A:
                    continue
                if h0_bundle_twist(bundle, B).h0[1] > 0:
                    assert B in listed


class TestCinque:
    def test_genus_two_remark(self):
        report = check_prop_cinque(G2, DivisorClass(7, 2), DivisorClass(1, 5), 1)
        assert report.extras["DA"] == 51
        assert report.status("0") is E
        assert report.status("2") is E
        assert "51 >= (z-1)A^2+2p_a(A)+1=5" in report.conditions[2].detail
        assert report.status("3") is Verdict.INCONCLUSIVE
        # fibres are lines of the embedding: members through two of their points contain them
        assert report.status("1") is Verdict.REFUTED
        assert report.verdict is Verdict.INCONCLUSIVE

    def test_hirzebruch(self):
        report = check_prop_cinque(F1, DivisorClass(3, 5), DivisorClass(1, 2), 1)
        assert report.extras["DA"] == 8
        assert report.status("2") is E
        assert report.status("3") is E
        assert "2C0+3f" in report.conditions[3].detail

    def test_d_equals_a(self):
        A = DivisorClass(1, 3)
        report = check_prop_cinque(F1, A, A, 1)
        # A^2 = 5 >= 2 p_a(A) + 1 = 1
        assert "D.A=5 >= (z-1)A^2+2p_a(A)+1=1" in report.conditions[2].detail

    def test_plane(self):
        report = check_prop_cinque(RuledBase.plane(), PlaneClass(4), PlaneClass(1), 1)
        assert report.verdict is E

    def test_bad_z(self):
        with pytest.raises(DomainError):
            check_prop_cinque(F1, DivisorClass(3, 5), DivisorClass(1, 2), 0)

    @given(st.integers(0, 3), st.integers(-2, 6), st.integers(-4, 14), st.integers(-1, 3), st.integers(-2, 8),
           st.integers(1, 3))
    def test_never_refuted(self, e, a, b, p, q, z):
        report = check_prop_cinque(RuledBase.hirzebruch(e), DivisorClass(a, b), DivisorClass(p, q), z)
        assert report.verdict is not Verdict.REFUTED
