import pytest

from syzdim.checks import (
    Analysis, CheckReport, ClaimVerdict, Instance, check_corollary_dim, check_lemma_shrink, check_lemma_strict,
    check_lemma_supp, check_prop_quick, check_theorem_main, detect_nondecreasing_start, run_checks,
)
from syzdim.instance import fixture


@pytest.fixture(scope="module")
def fibonacci():
    return Analysis(fixture("fibonacci").to_instance())


@pytest.fixture(scope="module")
def matfac():
    return Analysis(fixture("matfac").to_instance())


@pytest.fixture(scope="module")
def shrink():
    return Analysis(fixture("shrink").to_instance())


@pytest.mark.parametrize("betti, start", [
    ((1, 1, 1, 2, 3), 0),
    ((3, 1, 1, 3), 1),
    ((5, 3, 4, 2), None),
    ((2, 2, 2), 0),
    ((), None),
])
def test_detect_nondecreasing_start(betti, start):
    assert detect_nondecreasing_start(betti) == start


class TestFibonacci:
    def test_strict(self, fibonacci):
        v = check_lemma_strict(fibonacci)
        assert v.status == "holds" and "Omega_4" in v.witness

    def test_supp(self, fibonacci):
        assert check_lemma_supp(fibonacci, 1).status == "holds"

    def test_main_stabilizes_at_three(self, fibonacci):
        v = check_theorem_main(fibonacci)
        assert v.status == "holds" and v.index == 3

    def test_dim(self, fibonacci):
        v = check_corollary_dim(fibonacci)
        assert v.status == "holds" and "even -> 1" in v.witness and "odd -> 1" in v.witness

    def test_quick_switch(self, fibonacci):
        v = check_prop_quick(fibonacci)
        assert v.status == "holds" and "Spec R from Omega_4" in v.witness


class TestMatrixFactorization:
    def test_strict_vacuous(self, matfac):
        assert check_lemma_strict(matfac).status == "vacuous"

    def test_supp_n2(self, matfac):
        assert check_lemma_supp(matfac, 2).status == "holds"

    def test_main(self, matfac):
        v = check_theorem_main(matfac)
        assert v.status == "holds" and v.index == 0
        assert "beta even = beta odd = 2" in v.witness

    def test_dim_both_four(self, matfac):
        v = check_corollary_dim(matfac)
        assert v.status == "holds" and "even -> 4" in v.witness and "odd -> 4" in v.witness

    def test_shrink_all_shifts(self, matfac):
        v = check_lemma_shrink(matfac)
        assert v.status == "holds" and "supp(Omega_1) = supp(Omega_3)" in v.witness

    def test_quick_constant(self, matfac):
        v = check_prop_quick(matfac)
        assert v.status == "holds" and "constant, no switch" in v.witness


class TestShrinkFixture:
    def test_height_witness(self, shrink):
        v = check_lemma_shrink(shrink)
        assert v.status == "holds" and "p = (x, z), ht = 1" in v.witness


class TestTerminated:
    def test_free_module_vacuous(self):
        rep = run_checks(fixture("free").to_instance())
        assert rep.terminated
        for name in ("main", "dim", "quick"):
            assert rep.verdicts[name].status == "vacuous"

    def test_short_window(self):
        rep = run_checks(fixture("finite_length").to_instance(window=4), ["main"])
        assert rep.verdicts["main"].status in ("window-too-short", "holds")
        assert not rep.fails()


class _Tampered(Analysis):
    """Pretends no syzygy has full support, to make sure the checks can fail."""

    def full(self, i):
        return False


def test_strict_detects_violation():
    an = _Tampered(fixture("fibonacci").to_instance())
    v = check_lemma_strict(an)
    assert v.status == "fails" and v.index == 3


def test_report_round_trip():
    rep = run_checks(fixture("fibonacci").to_instance(window=5))
    again = CheckReport.from_json(rep.to_json())
    assert again == rep and again.version == 1
    assert "betti  1 1 1 2 3 5" in rep.text()


def test_report_version_checked():
    d = run_checks(fixture("free").to_instance()).to_dict()
    d["version"] = 99
    with pytest.raises(ValueError):
        CheckReport.from_dict(d)


def test_unknown_claim():
    with pytest.raises(ValueError):
        run_checks(fixture("free").to_instance(), ["nonsense"])


def test_bad_status():
    with pytest.raises(ValueError):
        ClaimVerdict("main", "maybe")


def test_deterministic():
    inst = fixture("shrink").to_instance(window=6)
    assert run_checks(inst) == run_checks(Instance(inst.ring, inst.module, 6, inst.label))
