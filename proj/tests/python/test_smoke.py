import numpy as np
import pytest

import collin_diag as cd


def rel(got, want):
    return abs(got - want) / abs(want)


def test_fixtures_listed():
    assert set(cd.fixture_names()) == {"theil", "kg"}


def test_theil_measures():
    y, d = cd.load_fixture("theil")
    assert d.labels == ["(Intercept)", "income", "relprice", "twenties"]
    assert d.dummy_positions == [3]
    assert rel(cd.rdetr(d)["det"], 0.9680139) < 1e-6
    assert all(rel(v, 1.033043) < 1e-5 for v in cd.vif(d)["vif"])
    cn = cd.cns(d)
    assert rel(cn["with"], 53.39671) < 1e-4
    assert rel(cn["without"], 24.15423) < 1e-4
    ki = cd.ki(d)
    for e, n in zip(ki["essential_pct"], ki["nonessential_pct"]):
        assert e + n == 100.0


def test_kg_problematic_and_contradiction():
    y, d = cd.load_fixture("kg")
    assert cd.rdetr(d)["det_problematic"]
    fit = cd.ols(y, d)
    assert fit["contradiction"]["contradiction"]
    assert fit["beta"] == pytest.approx([18.7021, 0.3803, 1.4186, 0.5331], abs=5e-4)


def test_simple_model_and_columns():
    y, d = cd.load_fixture("theil")
    s = cd.slm(d.subset([0, 1]))
    assert rel(s["cv"], 0.04993766) < 1e-4
    assert rel(s["cn"], 40.07489) < 1e-4
    assert rel(cd.cv(d.x[:, 1]), 0.04993766) < 1e-4
    assert rel(cd.proportion_of_ones(d.x[:, 3]), 41.17647) < 1e-4


def test_multicol_guidance_for_simple_model():
    _, d = cd.load_fixture("theil")
    report = cd.multicol(d.subset([0, 2]))
    assert report["simple_model"]["regressor"] == "relprice"


def test_not_applicable_and_singular():
    _, d = cd.load_fixture("theil")
    with pytest.raises(cd.NotApplicableError):
        cd.slm(d)
    x = np.column_stack([np.ones(6), np.arange(6.0), 2 * np.arange(6.0) + 0.0, [1, 0, 1, 0, 0, 1]])
    with pytest.raises(cd.SingularMatrixError):
        cd.vif(cd.Design(x, True, [3]))


def test_perturbation_reproducible():
    y, d = cd.load_fixture("theil")
    a = cd.perturb_n(y, d, iterations=300, seed=4)
    b = cd.perturb_n(y, d, iterations=300, seed=4, threads=3)
    np.testing.assert_array_equal(a["change_pct"], b["change_pct"])
    np.testing.assert_allclose(a["achieved_pct"], 1.0, atol=1e-12)


def test_csv_roundtrip(tmp_path):
    path = tmp_path / "d.csv"
    path.write_text("y,a,b\n1,2,3\n2,3,5\n4,5,4\n3,7,8\n5,4,1\n")
    y, d = cd.load_csv(str(path), {"y": "response", "a": "quantitative", "b": "quantitative"})
    assert list(y) == [1, 2, 4, 3, 5]
    assert d.labels == ["(Intercept)", "a", "b"]
    with pytest.raises(ValueError):
        cd.load_csv(str(tmp_path / "missing.csv"), {})
