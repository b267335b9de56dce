import math

import pytest

import tauber


def test_catalog_lists_entries():
    assert "sawtooth" in tauber.catalog_names()
    assert "alternating" in tauber.scalar_series_names()


def test_sawtooth_coefficients():
    c = tauber.fourier_coefficients("sawtooth", 4)
    assert len(c) == 9
    for k in range(1, 5):
        assert abs(c[4 + k]) == pytest.approx(0.5 / k, rel=1e-5)
    assert abs(c[4]) < 1e-15


def test_unknown_entry_raises():
    with pytest.raises(ValueError):
        tauber.fourier_coefficients("nope", 4)


def test_cesaro_means_of_alternating_series():
    partial, sigma = tauber.cesaro_means([1, -1, 1, -1, 1])
    assert [z.real for z in partial] == [1, 0, 1, 0, 1]
    assert sigma[-1].real == pytest.approx(3 / 5)


def test_delayed_mean_identity():
    terms = [complex(math.sin(k), math.cos(3 * k)) for k in range(40)]
    _, sigma = tauber.cesaro_means(terms)
    n, m = 7, 5
    rhs = (1 + n / m) * sigma[n + m - 1] - (n / m) * sigma[n - 1]
    assert tauber.delayed_mean(terms, n, m) == pytest.approx(rhs, rel=1e-12)


def test_kernel_audit():
    row = tauber.kernel_audit(64, 0.1)
    assert row["A_residual"] < 1e-8
    assert row["B_min"] >= -1e-12
    assert row["Bprime_integral"] == pytest.approx(math.pi, rel=1e-8)
    assert tauber.fejer_kernel(0, 1.0) == pytest.approx(0.5)


def test_conditions():
    assert tauber.check_condition("hardy", entry="sawtooth")["passes"]
    assert not tauber.check_condition("hardy", entry="lacunary")["passes"]
    assert tauber.check_condition("tailpower", entry="lacunary", p=2.0)["passes"]


def test_verify_fejer_set():
    r = tauber.verify("fejer-set", entry="squarewave", set="0.3:2.8416,3.4416:5.9832", n_max=1024)
    assert r["conclusion"]["outcome"] == "confirmed"
    assert r["table"][-1]["err_cesaro"] < 0.01


def test_verify_alternating_hypothesis_not_met():
    r = tauber.verify("tauberian", series="alternating")
    assert r["conclusion"]["outcome"] == "hypothesis not met"


def test_spaces():
    h = tauber.homogeneity("sine", "L2")
    assert h["h1_holds"] and h["h2_holds"] and h["h3_decreasing"]
    assert tauber.exp_norm_growth("W1,2") == pytest.approx(1.0, abs=0.05)
    assert 0.09 <= tauber.modulus_over_space("sine", "0:6.283185307179586", 0.1)["delta"] <= 0.11
