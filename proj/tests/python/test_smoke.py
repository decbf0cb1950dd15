"""End-to-end smoke tests of the Python bindings."""

import json
import math

import numpy as np
import pytest

import ccorder


def planted_pair(seed=20240817, n=6, m=6, M=64, d=2):
    """Two channels sharing d strong components over weak independent noise."""
    rng = np.random.default_rng(seed)

    def cnormal(rows, cols):
        return (rng.standard_normal((rows, cols)) +
                1j * rng.standard_normal((rows, cols))) / math.sqrt(2.0)

    shared = cnormal(d, M)
    X = 0.1 * cnormal(n, M)
    Y = 0.1 * cnormal(m, M)
    X[:d] += shared
    Y[:d] += shared
    return X, Y


TINY_SCENARIO = {
    "n": 8,
    "m": 8,
    "samples": 32,
    "d": 2,
    "f_x": 1,
    "f_y": 1,
    "sigma_x": [1.0, 1.0, 1.0],
    "sigma_y": [1.0, 1.0, 1.0],
    "rho": [0.9, 0.8],
    "mixing": {"kind": "random_unitary"},
    "noise": {"kind": "white", "sigma2": 0.01},
}


def test_chi2_round_trip():
    for nu in (1, 2, 8, 33):
        for p in (0.01, 0.5, 0.99):
            assert ccorder.chi2_cdf(ccorder.chi2_quantile(p, nu), nu) == pytest.approx(
                p, abs=1e-10)
    assert ccorder.chi2_quantile(0.99, 8) == pytest.approx(20.090235029663231, abs=1e-9)


def test_canonical_correlations():
    X, Y = planted_pair()
    spec = ccorder.canonical_correlations(X, Y)
    assert spec.r_x == 6 and spec.r_y == 6
    k = np.asarray(spec.k)
    assert k.shape == (6,)
    assert np.all(np.diff(k) <= 1e-12)  # sorted descending
    assert np.all((k >= 0.0) & (k <= 1.0))
    assert np.all(k[:2] > 0.9)  # the two planted components
    assert k[2] < 0.7

    reduced = ccorder.reduced_canonical_correlations(X, Y, 3, 3)
    assert reduced.r() == 3
    # Rank reduction can only shrink each correlation.
    assert np.all(np.asarray(reduced.k) <= k[:3] + 1e-12)


def test_statistic_identity():
    spec = ccorder.CanonicalSpectrum(3, 3, [0.9, 0.5, 0.1])
    M = 100
    for s in (0, 1, 2):
        lhs = ccorder.mdl_ic(spec, M, 3) - ccorder.mdl_ic(spec, M, s)
        rhs = ccorder.glrt_lambda(spec, M, s) + math.log(M) * (3 - s) * (3 - s)
        assert lhs == pytest.approx(rhs, abs=1e-9)
    assert ccorder.bartlett_lawley(spec, M, 0) > 0.0
    assert ccorder.ht_threshold(3, 3, 1, 0.01) == pytest.approx(
        ccorder.chi2_quantile(0.99, 8), abs=1e-12)
    with pytest.raises(ValueError):
        ccorder.CanonicalSpectrum(3, 3, [0.9, 0.5])  # wrong length


def test_detect_methods():
    X, Y = planted_pair()
    for method in ("ht", "mdl-threshold", "mdl-ic"):
        out = ccorder.detect(X, Y, method=method)
        assert out["d_hat"] == 2, method
        assert out["r_x_star"] >= 2 and out["r_y_star"] >= 2
        assert out["diagnostics"], method
    out = ccorder.detect(X, Y, method="ht", p_fa=0.05, r_max=3)
    assert out["d_hat"] == 2
    assert all(d["r_x"] <= 3 and d["r_y"] <= 3 for d in out["diagnostics"])


def test_detect_errors():
    X, Y = planted_pair()
    with pytest.raises(ValueError, match="out of scope"):
        ccorder.detect(X, Y, method="sev")
    with pytest.raises(ValueError):
        ccorder.detect(X, Y, method="mdl-threshold", p_fa=0.01)
    with pytest.raises(ValueError):
        ccorder.canonical_correlations(X, Y[:, :10])  # mismatched sample counts
    singular = np.vstack([X[:1], X[:1], X[2:]])
    with pytest.raises(RuntimeError, match="channel x"):
        ccorder.canonical_correlations(singular, Y)


def test_generate_deterministic():
    X1, Y1 = ccorder.generate(TINY_SCENARIO, seed=7, trial=0)
    X2, Y2 = ccorder.generate(json.dumps(TINY_SCENARIO), seed=7, trial=0)
    assert X1.shape == (8, 32) and Y1.shape == (8, 32)
    assert np.array_equal(X1, X2) and np.array_equal(Y1, Y2)
    X3, _ = ccorder.generate(TINY_SCENARIO, seed=7, trial=1)
    assert not np.array_equal(X1, X3)
    # A file-shaped payload (schema + scenario wrapper) is accepted too.
    wrapped = {"schema": 1, "scenario": TINY_SCENARIO}
    X4, _ = ccorder.generate(wrapped, seed=7, trial=0)
    assert np.array_equal(X1, X4)
    with pytest.raises(ValueError, match="schema"):
        ccorder.generate({"schema": 2, "scenario": TINY_SCENARIO}, seed=7)


def test_generate_then_detect():
    scenario = dict(TINY_SCENARIO, samples=64)
    X, Y = ccorder.generate(scenario, seed=11, trial=3)
    assert ccorder.detect(X, Y, method="mdl-threshold")["d_hat"] == 2


def test_run_experiment():
    experiment = {
        "schema": 1,
        "scenario": TINY_SCENARIO,
        "sweep": {"field": "samples", "values": [16, 32]},
        "detectors": [{"method": "mdl-threshold"}],
        "trials": 3,
        "seed": 7,
    }
    cells = ccorder.run_experiment(experiment)
    assert len(cells) == 2
    assert [c["sweep_value"] for c in cells] == [16.0, 32.0]
    for cell in cells:
        assert cell["detector"] == "mdl_threshold"
        assert cell["trials"] == 3
        assert 0.0 <= cell["p_d"] <= 1.0
        assert cell["err_trials"] == 0


def test_presets():
    names = ccorder.preset_names()
    assert names == ["fig1", "fig2", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"]
    spec = json.loads(ccorder.preset("fig2"))
    assert spec["schema"] == 1
    assert spec["scenario"]["n"] == 20
    assert spec["trials"] == 500
    with pytest.raises(ValueError):
        ccorder.preset("fig3")
