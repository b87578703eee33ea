import json
from fractions import Fraction

import pytest

from kzring import checks
from kzring.checks import SampleSpec
from kzring.core import HodgePoly
from kzring.lie import Weight
from kzring.ring import fusion, rep


def W(*parts):
    return Weight.of(len(parts) + 1, parts)


SMALL = SampleSpec(max_boxes=3, samples=25, seed=7)


def test_associativity_rep_sl2_exhaustive_bound():
    report = checks.check_associativity(rep(2, Fraction(5, 3)), SampleSpec(max_boxes=6, samples=80, seed=3))
    assert report.status == "pass" and report.cases_run > 100


@pytest.mark.parametrize("b", [1, 2, 4, 5])
def test_associativity_fusion_sl3(b):
    report = checks.check_associativity(fusion(3, 4, b), SMALL)
    assert report.status == "pass"


def test_bracketing():
    assert checks.check_bracketing(rep(3, Fraction(7, 2)), SMALL).status == "pass"
    assert checks.check_bracketing(fusion(3, 2, 4), SMALL).status == "pass"


def test_classical_limit():
    assert checks.check_classical_limit(rep(4, 7), SMALL).status == "pass"
    assert checks.check_classical_limit(fusion(4, 2, 1), SMALL).status == "pass"


def test_effectivity():
    assert checks.check_effectivity(rep(3, Fraction(13, 12)), SMALL).status == "pass"


def test_purity_checks():
    assert checks.check_purity_integer_inverse(3, 1, SMALL).status == "pass"
    assert checks.check_purity_integer_inverse(2, 2, SMALL).status == "pass"
    assert checks.check_fusion_purity(3, 3, SMALL).status == "pass"


def test_kappa_shift():
    assert checks.check_kappa_shift(3, 13, SMALL).status == "pass"
    report = checks.check_kappa_shift(2, Fraction(5, 2), SMALL)
    assert report.status == "pass" and report.params["shifted"] == "5/7"


def test_negative_kappa():
    assert checks.check_negative_kappa(3, Fraction(-7, 2), SMALL, level=2).status == "pass"


def test_pi_sl2_both_variants():
    for variant in ("standard", "conjugate"):
        for level in range(1, 5):
            report = checks.check_pi(2, level, variant, 30)
            assert report.status == "pass", report.failures[:2]


def test_sl2_pi_monomial_formula():
    # level 2, b = 1: S_6 folds to -S_0 with exponent s(6w) = 3; d(4) = 1 since 4 / 4 is integral
    assert checks.sl2_pi_monomial(2, 1, 3) == HodgePoly.monomial(1)
    assert checks.sl2_pi_monomial(2, 1, 6) == HodgePoly.monomial(3)


def test_pi_higher_rank_is_report_only():
    report = checks.check_pi(3, 1, "standard", 5)
    assert report.status == "report-only" and report.cases_run > 0


def test_pi_multiplicative():
    assert checks.check_pi_multiplicative(3, 2, 1, SMALL).status == "pass"
    assert checks.check_pi_multiplicative(2, 3, 4, SMALL).status == "pass"


def test_hodge_filtration_records():
    lams = [W(7, 5), W(9, 5)]
    report = checks.check_hodge_filtration(3, 10, lams, W(8, 6))
    assert report.status == "report-only"
    assert [(r["level"], r["partial_sum"], r["fusion_rank"]) for r in report.records] == [(11, 2, 2), (12, 3, 3)]


def test_weight_bounds_galois():
    report = checks.check_weight_bounds_galois(3, 2, [W(1, 0), W(1, 0), W(1, 0)], W(0, 0))
    assert report.status == "pass"
    assert report.params["all_monomial"] is True


def test_bgg_report_runs():
    report = checks.bgg_euler_report(2, 2, [W(2), W(2), W(2)], W(0))
    assert report.status == "report-only"
    # level large enough: only the unfolded term survives
    big = checks.bgg_euler_report(2, 20, [W(2), W(2)], W(2))
    assert len(big.records) == 2 and big.records[0]["sign"] == 1
    # nu on the affine wall: empty orbit
    wall = checks.bgg_euler_report(2, 2, [W(2), W(1)], W(3))
    assert wall.cases_run == 0 and wall.records[-1]["alternating_sum"] == {}


def test_fold_and_pieri_truncation():
    assert checks.check_fold_length(3, 2, SampleSpec(max_boxes=20, samples=100)).status == "pass"
    assert checks.check_pieri_truncation(3, 3).status == "pass"


def test_reports_are_json_and_deterministic():
    a = checks.check_associativity(rep(3, 5), SMALL).to_json()
    b = checks.check_associativity(rep(3, 5), SMALL).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert a["seed"] == 7


def test_failures_are_recorded():
    report = checks.CheckReport("demo")
    report.case(True, [W(1)], 1, 1)
    report.case(False, [W(1)], HodgePoly(1), HodgePoly(2))
    assert report.status == "fail" and not report.ok
    assert report.to_json()["failures"] == [{"inputs": [[1]], "expected": {"0": 1}, "actual": {"0": 2}}]
    ro = checks.CheckReport("demo", report_only=True)
    ro.case(False, [], 0, 1)
    assert ro.status == "report-only" and ro.ok
