import pytest

import excludant


def test_sequence_engines_agree():
    series = excludant.sequence("sigma-od-meex", 20)
    assert series[5] == 12
    assert series[6] == 18
    assert excludant.sequence("sigma-od-meex", 20, engine="enumerate") == series


def test_large_values_are_python_ints():
    assert excludant.sequence("a-o-od", 250)[250] == 1059507524909


def test_statistics_listing():
    names = {s["name"] for s in excludant.statistics()}
    assert {"a-o-od", "a-e-od", "sigma-od-moex"} <= names
    assert "rem2" in excludant.theorems()


def test_verify():
    assert excludant.verify("rem2")["status"] == "pass"
    bad = excludant.verify("aod-odd", perturb_at=7)
    assert bad["status"] == "fail"
    assert bad["mismatch"]["n"] == 7


def test_bijection():
    assert excludant.phi([6, 4, 3, 1], 1) == "6_1 4_1 3 2_0 1"
    assert excludant.phi_inverse("6_1 4_1 3 2_0 1") == ([6, 4, 3, 1], 1)
    assert excludant.check_bijection(12)["pass"]


def test_asym():
    rows = excludant.asym("a-o-od", [250, 1000])["rows"]
    assert [r["n"] for r in rows] == [250, 1000]
    assert rows[0]["exact"] == "1059507524909"


def test_errors():
    with pytest.raises(ValueError):
        excludant.sequence("nope", 3)
    with pytest.raises(ValueError):
        excludant.phi([3, 3, 1], 0)
    with pytest.raises(ValueError, match="no asymptotic law in source"):
        excludant.asym("sigma-od-meax", [10])
    with pytest.raises(excludant.BudgetExceeded):
        excludant.sequence("a-o-od", 60, engine="enumerate")
