import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollsmith.bundles import ey_family, fibre_pair_bundle, make_extension_bundle
from scrollsmith.criteria import valma
from scrollsmith.criteria import check_valma, check_valmae, search_valma_witness, search_valmae_witness
from scrollsmith.divisors import DivisorClass, RuledBase
from scrollsmith.verdict import DomainError, Verdict

F1 = RuledBase.hirzebruch(1)
E = Verdict.ESTABLISHED


def worked_example():
    return fibre_pair_bundle(1, 1, -1, 9)


class TestCheckValma:
    def test_worked_example(self):
        report = check_valma(worked_example(), 3, 2)
        assert [c.name for c in report.conditions] == ["1", "2", "3", "4", "5", "6"]
        assert all(c.status is E for c in report.conditions)
        assert report.verdict is E
        assert report.witness == (3, 2)
        assert "16 >= 2(z-1)(2x-e)=10" in report.conditions[5].detail

    def test_z_one(self):
        report = check_valma(worked_example(), 3, 1)
        assert report.status("6") is E
        assert report.status("3") is Verdict.REFUTED
        assert report.verdict is Verdict.INCONCLUSIVE

    def test_condition_two_strict(self):
        # M.f = lm
        bundle = make_extension_bundle(F1, DivisorClass(1, 3), DivisorClass(2, 9), w=2, lm=2, general_position=False)
        assert check_valma(bundle, 3, 1).status("2") is Verdict.REFUTED
        assert search_valma_witness(bundle, 10, 10) is None

    def test_preconditions(self):
        with pytest.raises(DomainError):
            check_valma(worked_example(), 2, 1)
        with pytest.raises(DomainError):
            check_valma(worked_example(), 3, 0)
        elliptic = make_extension_bundle(RuledBase.elliptic(0, True), DivisorClass(1, 4), DivisorClass(1, 9))
        with pytest.raises(DomainError):
            check_valma(elliptic, 3, 1)

    def test_split_needs_nontrivial_extension(self):
        # w = 0 and h1(L - M) = h1(-C0 - f) = 0: only the split bundle exists
        bundle = make_extension_bundle(F1, DivisorClass(1, 2), DivisorClass(2, 3))
        with pytest.raises(DomainError):
            check_valma(bundle, 3, 1)

    def test_necessary_screen(self):
        # conditions 1-6 hold at (2, 2), yet c1 = 3C0 + 4f, c2 = 4 forces a quotient C0
        bundle = make_extension_bundle(RuledBase.hirzebruch(0), DivisorClass(1, -1), DivisorClass(2, 5), w=1)
        report = check_valma(bundle, 2, 2)
        assert all(report.status(n) is E for n in "123456")
        assert report.status("screen") is Verdict.REFUTED
        assert report.verdict is Verdict.INCONCLUSIVE
        assert search_valma_witness(bundle, x_max=10, z_max=6) is None

    def test_report_json(self):
        data = check_valma(worked_example(), 3, 2).to_json()
        assert data["verdict"] == "Established"
        assert data["witness"] == {"x": 3, "z": 2}


class TestSearch:
    def test_worked_example(self):
        report = search_valma_witness(worked_example(), 10, 10)
        assert report is not None and report.witness == (3, 2)

    @pytest.mark.parametrize("L,M", [((2, 3), (1, 2)), ((1, 2), (2, 3))])
    def test_split_pair_has_no_witness(self, L, M, monkeypatch):
        bundle = make_extension_bundle(F1, DivisorClass(*L), DivisorClass(*M))
        assert search_valma_witness(bundle, x_max=40, z_max=12) is None
        # even ignoring the non-split requirement: z <= 2 fails condition 4, z >= 3 fails condition 6
        monkeypatch.setattr(valma, "_require_extension", lambda E: None)
        for x in range(3, 41):
            for z in range(1, 13):
                report = check_valma(bundle, x, z)
                assert report.status("4" if z <= 2 else "6") is not E

    def test_no_witness_for_refuted_ey(self):
        # the E_y bundle with y = 4, h = 4 is not very ample
        assert search_valma_witness(ey_family(4, 4), x_max=20, z_max=10) is None

    @given(st.integers(0, 3), st.integers(0, 2), st.integers(-3, 6), st.integers(-2, 14))
    def test_hits_revalidate(self, e, a, b_l, b_m):
        bundle = fibre_pair_bundle(e, a, b_l, b_m)
        report = search_valma_witness(bundle, x_max=e + 5, z_max=4)
        if report is not None:
            x, z = report.witness
            assert check_valma(bundle, x, z).verdict is E
            # first in lexicographic order
            for x2 in range(e + 2, x + 1):
                for z2 in range(1, (z if x2 == x else 5)):
                    assert check_valma(bundle, x2, z2).verdict is not E


class TestValmaProperties:
    @given(st.integers(0, 3), st.integers(-2, 3), st.integers(-6, 10), st.integers(-2, 3), st.integers(-6, 14),
           st.integers(0, 4), st.integers(0, 6), st.integers(1, 8))
    def test_never_refuted(self, e, aL, bL, aM, bM, w, dx, z):
        bundle = make_extension_bundle(RuledBase.hirzebruch(e), DivisorClass(aL, bL), DivisorClass(aM, bM), w=w)
        try:
            report = check_valma(bundle, e + 2 + dx, z)
        except DomainError:
            assert w == 0  # split-only numbers
            return
        assert report.verdict is not Verdict.REFUTED
        assert (report.verdict is E) == all(c.status is E for c in report.conditions)

    @given(st.integers(0, 3), st.integers(0, 2), st.integers(-3, 6), st.integers(-2, 14), st.integers(0, 5),
           st.integers(1, 10))
    def test_condition_six_monotone_in_z(self, e, a, b_l, b_m, dx, z):
        bundle = fibre_pair_bundle(e, a, b_l, b_m)
        x = e + 2 + dx
        if check_valma(bundle, x, z).status("6") is E:
            for z2 in range(1, z):
                assert check_valma(bundle, x, z2).status("6") is E


class TestValmae:
    def test_decomposable_example(self):
        base = RuledBase.elliptic(0, True)
        bundle = make_extension_bundle(base, DivisorClass(1, 4), DivisorClass(1, 9))
        report = check_valmae(bundle, 3, 1)
        assert [c.name for c in report.conditions] == ["0", "1", "2", "3", "4", "5", "6"]
        for name in ("0", "1", "2", "3", "5", "6"):
            assert report.status(name) is E
        assert "min(7, 10)" in report.conditions[1].detail
        # L - H - f = 0 and h1(O_Y) = 1 on an elliptic ruled surface
        assert report.status("4") is Verdict.INCONCLUSIVE
        assert report.verdict is Verdict.INCONCLUSIVE

    def test_degree_one_branch(self):
        base = RuledBase.elliptic(-1, False)
        bundle = make_extension_bundle(base, DivisorClass(1, 4), DivisorClass(1, 9))
        assert check_valmae(bundle, 2, 1).status("0") is E
        # x + 1/2 > 1 already at x = 1
        assert check_valmae(bundle, 1, 1).status("0") is E
        assert check_valmae(bundle, 0, 1).status("0") is not E

    def test_z_one_condition_six(self):
        base = RuledBase.elliptic(0, True)
        bundle = make_extension_bundle(base, DivisorClass(0, 1), DivisorClass(0, 3))
        report = check_valmae(bundle, 3, 1)
        assert ">= 2" in report.conditions[-1].detail

    def test_wrong_base(self):
        with pytest.raises(DomainError):
            check_valmae(worked_example(), 3, 1)

    def test_search(self):
        base = RuledBase.elliptic(0, True)
        bundle = make_extension_bundle(base, DivisorClass(1, 4), DivisorClass(1, 9))
        report = search_valmae_witness(bundle, x_max=6, z_max=4)
        assert report is not None and report.witness == (3, 2)
        assert check_valmae(bundle, *report.witness).verdict is E

    @given(st.integers(-1, 2), st.booleans(), st.integers(-1, 3), st.integers(-4, 10), st.integers(-1, 3),
           st.integers(-4, 14), st.integers(0, 6), st.integers(1, 6), st.integers(0, 3))
    def test_never_refuted(self, e, dec, aL, bL, aM, bM, x, z, w):
        base = RuledBase.elliptic(e, e > 0 or (dec and e == 0))
        bundle = make_extension_bundle(base, DivisorClass(aL, bL), DivisorClass(aM, bM), w=w)
        try:
            report = check_valmae(bundle, x, z)
        except DomainError:
            assert w == 0
            return
        assert report.verdict is not Verdict.REFUTED
