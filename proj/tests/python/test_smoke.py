import json
import math

import numpy as np
import pytest
from scipy.linalg import expm

import liereach as lr

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def test_presets_listed():
    names = [name for name, _ in lr.presets()]
    assert {"pt", "st", "st1", "bt", "lloyd"} <= set(names)


def test_normal_order_heisenberg_swap():
    # p x = x p - i I since [x, p] = i I.
    assert lr.normal_order("h(1)", [1, 0]) == "(1)*x^1p^1 + (-i)*1"
    assert lr.normal_order("h(1)", [0, 1]) == "(1)*x^1p^1"


def test_bracket_uses_the_table():
    assert lr.bracket("su(1,1)-scattering", [1, 0, 0], [0, 1, 0]) == "(-i)*Lz^1"


def test_analyze_potential_preset():
    report = lr.analyze(preset="pt")
    assert report["classification"] == "StronglyAnalyticallyControllable"
    assert report["dim_A"] == 4
    assert report["condition_BC"] is True
    assert report["seed"] == 42


def test_analyze_matches_cli_report():
    code, out, err = lr.run_command(["analyze", "--preset", "st1"])
    assert code == 0, err
    assert json.loads(out) == lr.analyze(preset="st1")


def test_config_text_round_trip_and_validation():
    cfg = lr.preset_config("pt")
    assert lr.analyze(config_text=json.dumps(cfg))["dim_A"] == 4
    assert lr.verify_jacobi(json.dumps(cfg)) is None
    cfg["algebra"]["brackets"]["0,1"].append([0, [0, 1], [1, 1]])
    message = lr.verify_jacobi(json.dumps(cfg))
    assert message is not None and "Jacobi" in message
    with pytest.raises(lr.ValidationError):
        lr.analyze(config_text=json.dumps(cfg))


def test_errors_map_to_exceptions():
    with pytest.raises(lr.ParseError):
        lr.analyze(preset="nope")
    with pytest.raises(lr.ParseError):
        lr.analyze(config_text="   ")
    with pytest.raises(lr.ArgumentError):
        lr.analyze()
    with pytest.raises(lr.ArgumentError):
        lr.analyze(preset="pt", cap=1)


def test_closure_and_coverage():
    assert lr.closure(preset="pt", cap=4)["dim"] == 4
    cov = lr.coverage(preset="lloyd", order=3)["coverage"][0]
    assert cov["covered"] == cov["total"] == 9


def test_propagate_matches_scipy():
    h0, controls = lr.hamiltonian_matrices(preset="qubit")
    assert np.allclose(h0, -0.5j * SZ)
    assert np.allclose(controls[0], -0.5j * SX)
    schedule = [(0.3, [1.2]), (0.7, [-0.4])]
    psi0 = np.array([1, 0], dtype=complex)
    expected = psi0
    for duration, (u,) in schedule:
        expected = expm(duration * (h0 + u * controls[0])) @ expected
    got = lr.propagate(h0, controls, schedule, psi0)
    assert np.allclose(got, expected, atol=1e-12)


def test_trotter_first_order():
    x, y = -0.5j * SX, -0.5j * SY
    e64 = lr.trotter_sum_error(x, y, 1.0, 64)
    e128 = lr.trotter_sum_error(x, y, 1.0, 128)
    assert 0.4 < e128 / e64 < 0.6


def test_attainability_bound():
    r = lr.attainability(-1j * SZ, -1j * SX, 1.0, [0.1, 0.01], np.array([1, 0], dtype=complex))
    assert r["bound_ok"]
    for eps, err, bound in r["rows"]:
        assert err <= bound * (1 + 1e-6)


def test_reach_probe_qubit():
    target = np.array([1, 1j], dtype=complex) / math.sqrt(2)
    r = lr.reach_probe(-0.5j * SZ, [-0.5j * SX], np.array([1, 0], dtype=complex), target, restarts=10)
    assert r["fidelity"] >= 0.999
    assert len(r["schedule"]) == 3
