import math

import pytest

import lamina

BASILICA = {"theta_minus": "1/3", "theta_plus": "2/3", "n": 2, "d": 2, "k": 2}


def test_angle_dynamics():
    assert lamina.sigma("1/7") == "2/7"
    assert lamina.sigma("1/8", 3) == "3/8"
    assert lamina.orbit_info("1/6") == (1, 2)
    with pytest.raises(lamina.AngleParseError):
        lamina.sigma("1/0")


def test_basilica_landing():
    alpha = (1 - math.sqrt(5)) / 2
    res = lamina.land("c=-1", "1/3")
    assert res["status"] == "landed"
    re, im = res["landing_point"]
    assert abs(complex(re, im) - alpha) < 1e-6
    assert lamina.co_land("c=-1", "1/3", "2/3") == "yes"
    assert lamina.co_land("c=-1", "0", "1/2") == "no"


def test_build_and_model():
    lam = lamina.build_lamination("c=-1", max_den=12)
    classes = [tuple(c) for c in lam["classes"]]
    assert ("1/3", "2/3") in classes
    assert lamina.check_unlinked(lam)["ok"]
    assert lamina.check_invariant(lam)["ok"]
    model = lamina.quotient_model(lam)
    nodes, edges = model["nodes"], model["edges"]
    assert len(edges) == len(nodes) - 1
    assert "<svg" in lamina.render_svg(lam)


def test_tuning_round_trip():
    assert lamina.tuning_p(BASILICA, "1/3") == "2/5"
    assert lamina.tuning_nu(BASILICA, "2/5") == "1/3"
    assert lamina.tuning_nu(BASILICA, "1/2") is None
    report = lamina.verify_order_preserving(BASILICA, 30)
    assert report["ok"]


def test_extension_factors():
    sub = {"degree": 2, "classes": [["1/3", "2/3"]]}
    ambient = lamina.pullback_closure({"degree": 2, "classes": []}, [["1/3", "2/3"]], 2)
    ext = lamina.extend_model(sub, BASILICA, ambient)
    assert ["2/5", "3/5"] in ext["classes"]
    assert lamina.factors_through(ext, sub, BASILICA)


def test_errors_map_to_python():
    with pytest.raises(lamina.DisconnectedJuliaSetError):
        lamina.build_lamination("c=-5")
    with pytest.raises(lamina.TuningError):
        lamina.tuning_p({"theta_minus": "1/5", "theta_plus": "2/3", "n": 2}, "1/3")
