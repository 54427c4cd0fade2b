import numpy as np
import pytest
from scipy import linalg

from spiked_fisher import (
    BlockLaw,
    block_law,
    compute_clt_params,
    fisher_lsd_density,
    fisher_lsd_support,
    multi_spike_law,
    nu_factors,
    phi,
    standardize,
    stieltjes_moments_empirical,
    stieltjes_moments_quadrature,
    theta,
)
from spiked_fisher.errors import DomainError, GeometryError, InvalidDimensionError

C1, C2 = 0.2, 0.5


def _psi(alpha, c1=C1, c2=C2):
    return alpha * (1 - c1 / (1 - alpha)) / (1 + c2 * alpha / (1 - alpha))


def test_support_closed_forms():
    a, b = fisher_lsd_support(5.0, 0.5)
    assert b == pytest.approx((1 + np.sqrt(3.0)) ** 2 / 0.25, rel=1e-12)
    a, b = fisher_lsd_support(0.2, 0.5)
    h = np.sqrt(0.6)
    assert a == pytest.approx(4 * (1 - h) ** 2, rel=1e-12)
    assert b == pytest.approx(4 * (1 + h) ** 2, rel=1e-12)
    assert a == pytest.approx(0.20323, abs=5e-5)
    assert b == pytest.approx(12.59677, abs=5e-5)
    a, b = fisher_lsd_support(1e-9, 1e-9)
    assert a == pytest.approx(1.0, abs=1e-4)
    assert b == pytest.approx(1.0, abs=1e-4)
    with pytest.raises(GeometryError):
        fisher_lsd_support(0.2, 1.2)


def test_density_total_mass():
    for c1, want in ((0.2, 1.0), (0.5, 1.0), (2.0, 0.5), (5.0, 0.2)):
        a, b = fisher_lsd_support(c1, 0.5)
        x = np.linspace(a, b, 400001)
        mass = np.trapezoid(fisher_lsd_density(x, c1, 0.5), x)
        assert mass == pytest.approx(want, abs=2e-4)


def test_quadrature_large_lambda_leading_order():
    sm = stieltjes_moments_quadrature(1e6, C1, C2)
    assert sm.m * 1e6 == pytest.approx(-1.0, rel=1e-4)


def test_quadrature_node_doubling():
    lam = 42.666667
    a = stieltjes_moments_quadrature(lam, C1, C2, nodes=2048)
    b = stieltjes_moments_quadrature(lam, C1, C2, nodes=4096)
    for name in ("m", "m2", "m3"):
        assert getattr(a, name) == pytest.approx(getattr(b, name), abs=1e-9)


def test_quadrature_closed_form_oracle():
    # fixed point + companion identity give m(psi(alpha)) in closed form:
    # m = [(1-c1)/psi - 1/alpha] / (c1 + c2 psi / alpha)
    for alpha in (20.0, 0.2, 0.1, 7.3, 0.35):
        lam = _psi(alpha)
        sm = stieltjes_moments_quadrature(lam, C1, C2)
        oracle = ((1 - C1) / lam - 1 / alpha) / (C1 + C2 * lam / alpha)
        assert sm.m == pytest.approx(oracle, rel=1e-9)


def test_moment_identities():
    for lam in (42.667, 0.1333, 0.0737, 30.0):
        sm = stieltjes_moments_quadrature(lam, C1, C2)
        # integrand identity (standard-sign transform): m3 = lam*m2 + m
        assert sm.m3 == pytest.approx(lam * sm.m2 + sm.m, abs=1e-8)
        # companion identities are exact by construction
        assert sm.m_under == pytest.approx(-(1 - C1) / lam + C1 * sm.m, abs=1e-14)
        assert sm.m2_under == pytest.approx((1 - C1) / lam**2 + C1 * sm.m2, abs=1e-14)
        assert sm.m2 >= 0 and sm.m2_under >= 0


def test_m2_is_derivative_of_m():
    for lam in (42.667, 30.0, 0.0737):
        h = 1e-6 * lam
        m_hi = stieltjes_moments_quadrature(lam + h, C1, C2).m
        m_lo = stieltjes_moments_quadrature(lam - h, C1, C2).m
        sm = stieltjes_moments_quadrature(lam, C1, C2)
        assert sm.m2 == pytest.approx((m_hi - m_lo) / (2 * h), rel=1e-6)


def test_quadrature_inside_support_raises():
    with pytest.raises(DomainError):
        stieltjes_moments_quadrature(1.0, C1, C2)


def test_quadrature_vs_empirical_null_spectrum():
    # simulate one null Fisher matrix at p=2000 and average the resolvents
    rng = np.random.default_rng(12)
    p, n1, n2 = 2000, 10000, 4000
    x = rng.standard_normal((p, n1))
    y = rng.standard_normal((p, n2))
    s1 = x @ x.T / n1
    s2 = y @ y.T / n2
    c = linalg.cholesky(s2, lower=True)
    w = linalg.solve_triangular(c, s1, lower=True)
    w = linalg.solve_triangular(c, w.T, lower=True)
    eigs = np.sort(linalg.eigvalsh((w + w.T) / 2))[::-1]
    for lam in (42.667, 30.0):
        sm_emp = stieltjes_moments_empirical(lam, eigs, p / n1)
        sm_quad = stieltjes_moments_quadrature(lam, p / n1, p / n2)
        assert sm_emp.m == pytest.approx(sm_quad.m, abs=1e-2)
        assert sm_emp.m2 == pytest.approx(sm_quad.m2, abs=1e-2)


def test_empirical_two_point_arithmetic():
    sm = stieltjes_moments_empirical(4.0, np.array([2.0, 2.0]), 1.0)
    assert sm.m == -0.5
    assert sm.m2 == 0.25
    assert sm.m3 == 0.5
    assert sm.m3 == pytest.approx(sm.lam * sm.m2 + sm.m, abs=1e-15)


def test_empirical_division_by_zero():
    with pytest.raises(DomainError):
        stieltjes_moments_empirical(2.0, np.array([2.0, 3.0]), 1.0)


def test_empirical_include_normalization():
    eigs = np.array([10.0, 3.0, 2.0, 1.0])
    sm = stieltjes_moments_empirical(5.0, eigs, 0.5, include=[0], denominator=4)
    assert sm.m == pytest.approx((1 / (10.0 - 5.0)) / 4)


def test_one_sample_reduction_oracle():
    # c2 -> 0 reduces the spike variance to the classical one-sample value
    # 2 alpha^2 (1 - c1/(alpha-1)^2) for S = Sigma^{1/2}(XX'/n)Sigma^{1/2}
    alpha, c1, c2 = 20.0, 0.2, 1e-7
    psi_val = alpha * (1 - c1 / (1 - alpha)) / (1 + c2 * alpha / (1 - alpha))
    sm = stieltjes_moments_quadrature(psi_val, c1, c2, nodes=4096)
    th = theta(alpha, psi_val, c1, c2, sm)
    ph = phi(alpha, psi_val, c2, sm)
    psi_one = alpha + c1 * alpha / (alpha - 1)
    classical = c1 * 2 * alpha**2 * (1 - c1 / (alpha - 1) ** 2) / psi_one**2
    assert 2 * th / ph**2 == pytest.approx(classical, rel=1e-4)


def test_phi_collapse_at_zero_ratios():
    # c1 = c2 = 0: m = m2 = 0, m_under = -1/psi, m2_under = 1/psi^2, psi = alpha
    from spiked_fisher.clt import StieltjesMoments

    alpha = 3.0
    sm = StieltjesMoments(lam=alpha, m=0.0, m_under=-1 / alpha, m2=0.0,
                          m2_under=1 / alpha**2, m3=0.0)
    assert phi(alpha, alpha, 0.0, sm) == pytest.approx(1.0, abs=1e-14)
    assert theta(alpha, alpha, 0.0, 0.0, sm) == pytest.approx(0.0, abs=1e-14)
    assert nu_factors(alpha, alpha, 0.5, 0.0, sm)[1] == 0.0


def test_reference_clt_values():
    # frozen values of this implementation, cross-validated by the fixed
    # point, the closed-form m, and the one-sample reduction above
    prm1 = compute_clt_params(20.0, C1, C2)
    prm2 = compute_clt_params(0.2, C1, C2)
    prm3 = compute_clt_params(0.1, C1, C2)
    assert prm1.sigma_sq == pytest.approx(2.33290, abs=2e-4)
    assert prm2.phi == pytest.approx(81.0 / 56.0, rel=1e-9)
    assert prm2.theta == pytest.approx(81.0 / 70.0, rel=1e-9)
    assert prm3.sigma_sq == pytest.approx(1.32977, abs=2e-4)
    # binary population (beta = -2) with coordinate eigenvectors
    b1 = compute_clt_params(20.0, C1, C2, beta_x=-2.0, beta_y=-2.0)
    assert b1.sigma_sq == pytest.approx(1.12046, abs=2e-4)
    b3 = compute_clt_params(0.1, C1, C2, beta_x=-2.0, beta_y=-2.0)
    assert b3.sigma_sq == pytest.approx(0.17102, abs=2e-4)


def test_block_law_reductions():
    prm = compute_clt_params(0.2, C1, C2)
    goe = block_law(prm.theta, prm.nu1, prm.nu2)
    assert goe.var_diag == pytest.approx(2 * prm.theta)
    assert goe.var_offdiag == pytest.approx(prm.theta)
    binary = block_law(prm.theta, prm.nu1, prm.nu2, beta_x=-2.0, beta_y=-2.0)
    assert binary.var_diag == pytest.approx(2 * prm.theta - 2 * prm.nu1 - 2 * prm.nu2)
    assert binary.var_offdiag == pytest.approx(prm.theta)  # pair sums vanish in case I
    with pytest.raises(InvalidDimensionError):
        block_law(0.1, 1.0, 1.0, beta_x=-2.0, beta_y=-2.0)


def test_standardize():
    assert standardize(42.667, 42.667, 200, 4) == 0.0
    psi_val = 42.667
    l = psi_val * (1 + 1 / np.sqrt(196))
    assert standardize(l, psi_val, 200, 4) == pytest.approx(1.0, rel=1e-12)
    assert standardize(45.0, 42.667, 200, 4) == pytest.approx(
        np.sqrt(196) * (45.0 / 42.667 - 1.0), rel=1e-12
    )
    with pytest.raises(DomainError):
        standardize(1.0, 0.0, 10, 1)


def test_multi_spike_law_single():
    law = BlockLaw(var_diag=2.0, var_offdiag=1.0)
    draws = multi_spike_law(1, law, phi_k=2.0, n_draws=200000, seed=5)
    assert draws.shape == (200000, 1)
    assert draws.var() == pytest.approx(2.0 / 4.0, rel=0.02)


def test_multi_spike_law_pair_statistics():
    law = BlockLaw(var_diag=2.326, var_offdiag=1.163)
    phi_k = 1.439
    draws = multi_spike_law(2, law, phi_k, n_draws=400000, seed=6)
    assert np.all(draws[:, 0] >= draws[:, 1])  # descending
    avg = draws.mean(axis=1)
    assert abs(avg.mean()) < 5e-3
    # trace/2 is Gaussian with variance var_diag / (2 phi^2)
    assert avg.var() == pytest.approx(law.var_diag / (2 * phi_k**2), rel=0.02)


def test_multi_spike_law_closed_form_matches_eigh():
    law = BlockLaw(var_diag=2.0, var_offdiag=1.0)
    fast = multi_spike_law(2, law, 1.5, n_draws=30000, seed=9)
    slow_vals = []
    rng = np.random.default_rng(10)
    for _ in range(30000):
        g = np.zeros((2, 2))
        g[0, 1] = g[1, 0] = np.sqrt(law.var_offdiag) * rng.standard_normal()
        np.fill_diagonal(g, np.sqrt(law.var_diag) * rng.standard_normal(2))
        slow_vals.append(np.sort(np.linalg.eigvalsh(-g / 1.5))[::-1])
    slow = np.asarray(slow_vals)
    for j in range(2):
        assert fast[:, j].mean() == pytest.approx(slow[:, j].mean(), abs=0.03)
        assert fast[:, j].var() == pytest.approx(slow[:, j].var(), rel=0.08)
