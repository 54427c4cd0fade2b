import numpy as np
import pytest
from scipy import stats

from spiked_fisher import (
    RoySetup,
    SignalSetup,
    fit_mvlm,
    noncentral_spike,
    roy_decide,
    roy_power,
    roy_threshold,
    signal_fisher,
    signal_power,
    signal_simulate,
    spike_power,
    stream_rng,
    tw1_quantile,
)
from spiked_fisher.errors import DesignRankError, GeometryError


def test_fit_perfect_model_zero_residual():
    rng = stream_rng(31, 0)
    p, n, q0 = 4, 30, 3
    b = rng.standard_normal((p, q0))
    z = rng.standard_normal((q0, n))
    fit = fit_mvlm(b @ z, z, q1=2)
    assert np.abs(fit.g).max() < 1e-18
    assert np.allclose(fit.b_hat, b, atol=1e-10)


def test_h_vanishes_at_the_fitted_null():
    rng = stream_rng(32, 0)
    p, n, q0 = 3, 25, 2
    w = rng.standard_normal((p, n))
    z = rng.standard_normal((q0, n))
    fit = fit_mvlm(w, z, q1=1)
    refit = fit_mvlm(w, z, q1=1, b1_null=fit.b_hat[:, :1])
    assert np.abs(refit.h).max() < 1e-18


def test_wishart_mean_of_residual_crossproduct():
    # G ~ W_p(Sigma, n - q0): E trace(G) = (n - q0) trace(Sigma)
    rng = stream_rng(33, 0)
    p, n, q0 = 4, 40, 4
    traces = []
    for _ in range(300):
        z = rng.standard_normal((q0, n))
        w = rng.standard_normal((p, n))  # B = 0, Sigma = I
        traces.append(np.trace(fit_mvlm(w, z, q1=2).g) / (n - q0))
    assert np.mean(traces) == pytest.approx(p, rel=0.05)


def test_rank_deficient_design_raises():
    z = np.ones((3, 20))
    with pytest.raises(DesignRankError):
        fit_mvlm(np.ones((2, 20)), z, q1=1)


def test_roy_setup_closed_forms():
    # c1 = 5, c2 = 0.5: psi0 = (1+sqrt(3))^2/0.25
    setup = RoySetup(p=50, n=120, q0=10, q1=10)
    assert setup.c1_tilde == 5.0
    assert setup.c2_tilde == pytest.approx(50 / 110)
    setup = RoySetup(p=100, n=240, q0=20, q1=20)  # c1=5, c2=100/220
    big = RoySetup(p=200, n=480, q0=40, q1=40)
    assert big.psi0 == pytest.approx(setup.psi0, rel=1e-12)
    assert big.sigma_tw == pytest.approx(setup.sigma_tw / 2 ** (2 / 3), rel=1e-12)


def test_roy_threshold_value():
    setup = RoySetup(p=50, n=120, q0=10, q1=10, level=0.05)
    thr = roy_threshold(setup)
    assert thr == pytest.approx(setup.psi0 + setup.sigma_tw * tw1_quantile(0.95), rel=1e-12)


def test_geometry_errors():
    with pytest.raises(GeometryError):
        RoySetup(p=50, n=55, q0=10, q1=5)  # n < p + q0
    with pytest.raises(GeometryError):
        RoySetup(p=50, n=100, q0=50, q1=5)  # c2 >= 1
    with pytest.raises(GeometryError):
        RoySetup(p=50, n=120, q0=10, q1=11)  # q1 > q0


def test_roy_decide_strict():
    assert roy_decide(5.0, 5.0) is False
    assert roy_decide(5.0 + 1e-12, 5.0) is True
    assert roy_decide(0.0, 5.0) is False


def test_roy_power_trivials():
    setup = RoySetup(p=50, n=187, q0=125, q1=25)
    thr = roy_threshold(setup)
    assert roy_power(thr, 2.0, 50, setup) == pytest.approx(0.5)
    # psi -> infinity saturates at Phi(sqrt(p)/sigma), the formula's supremum
    sat = float(stats.norm.cdf(np.sqrt(50) / 2.0))
    assert roy_power(1e9, 2.0, 50, setup) == pytest.approx(sat, abs=1e-9)
    assert roy_power(1e9, 2.0, 50, setup) > 0.999
    lo = roy_power(thr * 1.1, 2.0, 50, setup)
    hi = roy_power(thr * 1.5, 2.0, 50, setup)
    assert lo < hi
    with pytest.raises(GeometryError):
        roy_power(thr, 0.0, 50, setup)


def test_noncentral_spike_rank_one():
    b1 = np.zeros((6, 2))
    b1[:, 0] = [1.0, 2.0, 0.0, 0.0, 0.0, 0.0]
    a = np.diag([4.0, 1.0])
    # B1 A B1' has top eigenvalue 4 * (1 + 4) = 20 -> spike 1 + 20/q1
    assert noncentral_spike(b1, a, None, q1=2) == pytest.approx(1 + 20 / 2)
    assert noncentral_spike(b1, a, 2.0 * np.eye(6), q1=2) == pytest.approx(1 + 10 / 2)


def test_signal_setup_beta1():
    a = np.zeros((5, 1))
    a[0, 0] = np.sqrt(5.0)
    setup = SignalSetup(p=5, m=10, t=20, mixing=a)
    assert setup.beta1 == pytest.approx(6.0)
    assert SignalSetup(p=5, m=10, t=20).beta1 == 1.0


def test_signal_simulate_null_moments():
    setup = SignalSetup(p=6, m=20000, t=20000)
    y, z = signal_simulate(setup, 44)
    assert y.shape == (6, 20000) and z.shape == (6, 20000)
    assert np.linalg.norm(y @ y.T / 20000 - np.eye(6), 2) < 0.1
    assert np.linalg.norm(z @ z.T / 20000 - np.eye(6), 2) < 0.1


def test_signal_fisher_identical_data_unit_spectrum():
    rng = stream_rng(45, 0)
    y = rng.standard_normal((5, 30))
    spectrum = signal_fisher(y, y, 30, 30)
    assert np.allclose(spectrum.eigs, 1.0, atol=1e-10)


def test_signal_null_tracy_widom_calibration():
    # null 95th percentile of l1 sits near the TW-calibrated threshold
    setup = SignalSetup(p=50, m=100, t=200)
    roy = setup.roy_analog()
    thr = roy_threshold(roy)
    l1 = []
    for r in range(400):
        y, z = signal_simulate(setup, stream_rng(46, 0, r))
        l1.append(signal_fisher(y, z, setup.m, setup.t).eigs[0])
    q95 = np.quantile(l1, 0.95)
    assert q95 == pytest.approx(thr, abs=0.25)
    rate = np.mean(np.asarray(l1) > thr)
    assert 0.02 <= rate <= 0.09


def test_signal_power_monotone_grid():
    setup = SignalSetup(p=50, m=100, t=200)
    grid = np.arange(1.0, 8.01, 0.25)
    powers = [signal_power(b, setup) for b in grid]
    assert np.all(np.diff(powers) >= -1e-9)
    assert powers[0] == pytest.approx(0.05, abs=1e-6)
    assert powers[-1] > 0.99
    with pytest.raises(GeometryError):
        signal_power(0.5, setup)


def test_spike_power_absorbed_equals_level():
    setup = RoySetup(p=50, n=300, q0=100, q1=100, level=0.05)
    # alpha barely above 1 is absorbed at the null edge
    assert spike_power(1.05, setup) == pytest.approx(0.05, abs=1e-6)


def test_l1_concentrates_at_psi_for_strong_signal():
    from spiked_fisher import compute_clt_params

    setup = SignalSetup(p=50, m=100, t=200)
    a = np.zeros((50, 1))
    a[0, 0] = np.sqrt(5.0)  # beta1 = 6
    strong = SignalSetup(p=50, m=100, t=200, mixing=a)
    prm = compute_clt_params(6.0, 0.5, 0.25)
    l1 = []
    for r in range(200):
        y, z = signal_simulate(strong, stream_rng(47, 0, r))
        l1.append(signal_fisher(y, z, 100, 200).eigs[0])
    assert np.mean(l1) == pytest.approx(prm.psi, rel=0.05)
