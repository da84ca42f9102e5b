import pytest

import toricapprox as ta


def test_decide_darmon_235():
    v = ta.decide_m_approx("p2", {"darmon": [2, 3, 5]})
    assert v["holds"] == "YES"
    assert v["invariants"]["index"] == 1


def test_hirzebruch_index():
    v = ta.decide_m_approx("h2", "darmon:2,2,2,2")
    assert v["holds"] == "NO"
    assert v["invariants"]["index"] == 4


def test_pi1_and_thinness():
    assert ta.pi1("p1", [2, 2])["group"]["invariant_factors"] == [2]
    t = ta.classify_thinness("p1", "darmon:2,2")
    assert t["classification"] == "STRICTLY_D_THIN"
    assert t["d_list"] == [2]


def test_census_and_points():
    assert ta.enumerate("p1", "campana:2,2", 9)["count"] == 24
    assert ta.enumerate("p1", "darmon:2,2", 9)["count"] == 16
    assert ta.is_m_point("p2", "union_of_axes", [2, 3, 5])["ok"]
    assert not ta.is_m_point("p2", "union_of_axes", [2, 4, 5])["ok"]


def test_approximate_certificate():
    targets = {str(p): {"point": {"coords": ["1", "3", "5"]}, "digits": 2} for p in (2, 3, 5)}
    cert = ta.approximate("p2", "campana:2,2,2", targets)
    assert cert["verified"]


def test_snf():
    s = ta.snf([[2, 4], [6, 8]])
    assert s["diagonal"] == [2, 4]


def test_example_and_cli():
    e = ta.example("p11r", r=2, m=[2, 3, 7])
    assert e["expected"] == e["verdict"]["holds"] == "YES"
    code, out, _ = ta.run_cli("pi1", "--fan", "p1", "--m", "2,2")
    assert code == 0 and out.startswith("[2]")


def test_errors():
    with pytest.raises(ta.InputError):
        ta.decide_m_approx("p2", "darmon:2,3")
    with pytest.raises(ValueError):
        ta.validate_fan({"dim": 1})
