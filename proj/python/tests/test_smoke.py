import json
from fractions import Fraction as F

import pytest

import symcert

MIXED = [4, 4, F(1, 4), F(1, 4)]


def test_sigma_and_means():
    assert symcert.sigma(MIXED) == [1, F(17, 2), F(321, 16), F(17, 2), 1]
    assert symcert.means(MIXED) == [1, F(17, 8), F(107, 32), F(17, 8), 1]
    assert symcert.sigma(["1", "0.5", "3/2"]) == symcert.sigma_naive([1, F(1, 2), F(3, 2)])


def test_counterexample_gap():
    r = symcert.linear_combo_gap(MIXED, [1, 0, 1])
    assert r["gap"] == F(-825, 1024)
    assert r["relation"] == "Negative"


def test_two_term_gap_and_equality():
    assert symcert.gen_nm_gap([1, 2, 3, 4], 1, 1)["gap"] == F(95, 18)
    r = symcert.gen_nm_gap([-2, -2, -2, 7], 2, 1)
    assert r["gap"] == 0
    assert r["equality_case"] == "RatioMinusAlpha"


def test_floats_rejected():
    with pytest.raises(TypeError):
        symcert.sigma([1.5, 2])


def test_range_errors():
    with pytest.raises(ValueError):
        symcert.gen_nm_gap([1, 2, 3], 0, 2)
    with pytest.raises(symcert.PreconditionError):
        symcert.gen_maclaurin_chain([1, 2, 3], -1)


def test_certificate():
    cc = symcert.cert_constants(6, 2)
    assert cc["theta1"] == F(35, 103)
    assert cc["t"] == F(55, 36)
    assert cc["discriminant"] == F(1025325, 103)
    assert symcert.theta_for(4, 1) == F(5, 11)
    assert symcert.decomposition_residual([1, -2, F(3, 7)], F(5, 2), 7, 3) == 0
    assert symcert.symbolic_check(5, 2)["decomposition_holds"]
    assert all(row["pass"] for row in symcert.lemma_scan(4, 10))


def test_endpoint_witness():
    w = symcert.remark_violation(3, 0)
    assert w["x"] == [2, 2, 2]
    assert w["alpha"] == -1
    assert w["report"]["gap"] == -1


def test_reduction():
    assert symcert.associated_cubic([1, 2, 3, 4], 1) == [1, F(-15, 2), F(35, 2), F(-25, 2)]
    assert symcert.cubic_discriminant([1, F(-15, 2), F(35, 2), F(-25, 2)]) == F(125, 16)
    r = symcert.reduce_to_three([1, 2, 3, 4], 1, 1)
    assert r["branch"] == "CaseA"
    assert r["reduced_gap"] == symcert.gen_nm_gap([1, 2, 3, 4], 1, 1)["gap"]


def test_search_is_deterministic():
    a = symcert.find_counterexample(3, 4, seed=5, budget=3000)
    b = symcert.find_counterexample(3, 4, seed=5, budget=3000, threads=2)
    assert a == b
    assert a["found"] and a["witness"]["reverified"]
    assert not symcert.find_counterexample(1, 4, seed=5, budget=200)["found"]
    s = symcert.empirical_theta(4, 1, samples=300, seed=2)
    assert F(s["min_ratio"]) >= F(5, 11)


def test_report_roundtrip():
    doc = json.loads(symcert.report(n_max=4, samples=5))
    assert doc["counterexample"]["gap"] == "-825/1024"
    assert symcert.report(n_max=4, samples=5) == symcert.report(n_max=4, samples=5)
