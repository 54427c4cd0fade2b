"""Roy maximum-root test for the multivariate linear model, and signal detection.

Roy's test rejects B1 = B1_0 when the scaled largest root
l_1 = (n - q0)/q1 * lambda_max(H G^{-1}) exceeds psi0 + sigma_tw * C_level,
the Tracy-Widom calibrated edge of the null Fisher spectrum.  Under a
detectable alternative the asymptotic power is
Phi(-sqrt(p) (psi0 + sigma_tw C - psi_n1) / (psi_n1 sigma1)).

Signal detection tests A = 0 in y_t = A x_t + Sigma^{1/2} e_t against
noise-only recordings z_t = Sigma^{1/2} r_t through the two-sample Fisher
matrix (T/m)(ZZ*)^{-1}(YY*); the alternative's spike is
beta1 = lambda_max(Sigma^{-1}(AA* + Sigma)).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg, stats

from .clt import compute_clt_params
from .errors import DesignRankError, GeometryError, SingularMatrixError
from .phase import BulkMeasure, classify_spike, SpikeClass
from .spectra import FisherSpectrum, pencil_eigenvalues
from .tracy_widom import tw1_cdf, tw1_quantile


@dataclass(frozen=True)
class RoySetup:
    """Geometry of the Roy test: dimensions, ratios, and null-edge constants."""

    p: int
    n: int
    q0: int
    q1: int
    level: float = 0.05

    def __post_init__(self):
        if not (1 <= self.q1 <= self.q0):
            raise GeometryError("need 1 <= q1 <= q0")
        if self.n < self.p + self.q0:
            raise GeometryError(f"need n >= p + q0 (n={self.n}, p={self.p}, q0={self.q0})")
        if not 0.0 < self.level < 1.0:
            raise GeometryError("level must lie in (0, 1)")
        if self.c2_tilde >= 1.0:
            raise GeometryError("need p < n - q0 so that c2 < 1")

    @property
    def q2(self) -> int:
        return self.q0 - self.q1

    @property
    def c1_tilde(self) -> float:
        return self.p / self.q1

    @property
    def c2_tilde(self) -> float:
        return self.p / (self.n - self.q0)

    @property
    def h(self) -> float:
        c1, c2 = self.c1_tilde, self.c2_tilde
        return float(np.sqrt(c1 + c2 - c1 * c2))

    @property
    def psi0(self) -> float:
        """Null limit of the largest scaled root (upper LSD edge)."""
        return (1.0 + self.h) ** 2 / (1.0 - self.c2_tilde) ** 2

    @property
    def sigma_tw(self) -> float:
        """Tracy-Widom scale of the largest null root."""
        c1, c2, h = self.c1_tilde, self.c2_tilde, self.h
        denom_core = (c1 + c2) ** 2 - c2 * (c1 + h) ** 2
        if denom_core == 0.0:
            raise GeometryError("degenerate geometry: TW scale denominator vanishes")
        num = c1**2 * (c1 + h) ** 4 * (c1 + c2) ** 6
        den = (self.n - self.q0 + self.q1) ** 2 * h * c2**2 * denom_core**4
        return float((num / den) ** (1.0 / 3.0))

    @property
    def tw_quantile(self) -> float:
        return tw1_quantile(1.0 - self.level)

    def sample_sizes(self) -> tuple[int, int]:
        """(n1, n2) of the equivalent two-sample Fisher matrix."""
        return self.q1, self.n - self.q0


@dataclass(frozen=True)
class LinearModelFit:
    """Least-squares fit of W = B Z + E with the Roy test matrices."""

    b_hat: np.ndarray
    g: np.ndarray
    h: np.ndarray
    a11_2: np.ndarray

    def largest_root(self, setup: RoySetup) -> float:
        """l_1 = (n - q0)/q1 * lambda_max(H G^{-1}) via the low-rank reduction."""
        m = _h_factor(self.h)
        if m.shape[1] == 0:
            return 0.0
        try:
            gm = linalg.solve(self.g, m, assume_a="pos")
        except linalg.LinAlgError as exc:
            raise SingularMatrixError("residual matrix G is singular") from exc
        lam = linalg.eigvalsh(m.T @ gm)[-1]
        return float((setup.n - setup.q0) / setup.q1 * lam)


def _h_factor(h: np.ndarray) -> np.ndarray:
    """Low-rank factor M with H = M M' (eigen-based, rank = positive spectrum)."""
    w, v = linalg.eigh((h + h.T) / 2.0)
    keep = w > max(w.max(), 0.0) * 1e-14
    return v[:, keep] * np.sqrt(w[keep])


def fit_mvlm(
    w: np.ndarray, z: np.ndarray, q1: int, b1_null: np.ndarray | None = None
) -> LinearModelFit:
    """Fit the p-dimensional linear model and build G, H for testing B1 = B1_0.

    G is the residual cross-product, H = (B1_hat - B1_0) A_{11:2} (.)', with
    A_{11:2} the Schur complement of the partitioned design Gram matrix.
    """
    p, n = w.shape
    q0 = z.shape[0]
    if z.shape[1] != n:
        raise DesignRankError("W and Z must share the sample dimension")
    if not (1 <= q1 <= q0):
        raise DesignRankError("need 1 <= q1 <= q0")
    zzt = z @ z.T
    try:
        cho = linalg.cho_factor(zzt)
    except linalg.LinAlgError as exc:
        raise DesignRankError("design matrix Z is rank deficient") from exc
    b_hat = linalg.cho_solve(cho, z @ w.T).T
    resid = w - b_hat @ z
    g = resid @ resid.T
    z1, z2 = z[:q1], z[q1:]
    if z2.shape[0]:
        cross = linalg.solve(z2 @ z2.T, z2 @ z1.T, assume_a="pos")
        a11_2 = z1 @ z1.T - (z1 @ z2.T) @ cross
    else:
        a11_2 = z1 @ z1.T
    a11_2 = (a11_2 + a11_2.T) / 2.0
    d = b_hat[:, :q1] - (b1_null if b1_null is not None else 0.0)
    h = d @ a11_2 @ d.T
    return LinearModelFit(b_hat=b_hat, g=g, h=(h + h.T) / 2.0, a11_2=a11_2)


def roy_threshold(setup: RoySetup) -> float:
    """Rejection threshold psi0 + sigma_tw * C_{1-level}."""
    return setup.psi0 + setup.sigma_tw * setup.tw_quantile


def roy_decide(l1: float, threshold: float) -> bool:
    """Reject when the scaled largest root strictly exceeds the threshold."""
    return bool(l1 > threshold)


def roy_power(psi_n1: float, sigma1: float, p: int, setup: RoySetup) -> float:
    """Asymptotic power Phi(-sqrt(p) (threshold - psi_n1)/(psi_n1 sigma1))."""
    if sigma1 <= 0 or psi_n1 <= 0:
        raise GeometryError("sigma1 and psi_n1 must be positive")
    thr = roy_threshold(setup)
    return float(stats.norm.cdf(-np.sqrt(p) * (thr - psi_n1) / (psi_n1 * sigma1)))


def spike_power(alpha: float, setup: RoySetup, p: int | None = None) -> float:
    """Classification-aware power at population spike ``alpha``.

    Distant spikes use the Gaussian CLT power with oracle (psi_n, sigma1);
    absorbed spikes keep the largest root at the null edge, so the rejection
    probability is the Tracy-Widom tail at the shifted threshold (= level
    when the absorbed limit equals psi0).
    """
    p = setup.p if p is None else p
    c1, c2 = setup.c1_tilde, setup.c2_tilde
    res = classify_spike(alpha, c1, c2, BulkMeasure.point_mass(1.0))
    if res.classification is SpikeClass.DISTANT:
        params = compute_clt_params(alpha, c1, c2)
        return roy_power(params.psi, params.sigma, p, setup)
    shift = (setup.psi0 - res.rho) / setup.sigma_tw
    return float(1.0 - tw1_cdf(setup.tw_quantile + shift))


def noncentral_spike(
    b1: np.ndarray, a11_2: np.ndarray, sigma: np.ndarray | None, q1: int
) -> float:
    """Largest population spike induced by a mean alternative B1.

    The numerator Wishart has mean q1 Sigma + B1 A_{11:2} B1', so the
    equivalent two-sample spike is 1 + lambda_max(Sigma^{-1} B1 A B1')/q1.
    """
    m = b1 @ a11_2 @ b1.T
    if sigma is None:
        lam = linalg.eigvalsh((m + m.T) / 2.0)[-1]
    else:
        lam = pencil_eigenvalues((m + m.T) / 2.0, sigma)[0]
    return float(1.0 + lam / q1)


@dataclass(frozen=True)
class SignalSetup:
    """Mixing geometry for the signal-detection test."""

    p: int
    m: int
    t: int
    mixing: np.ndarray | None = None
    noise_cov: np.ndarray | None = None
    level: float = 0.05

    def __post_init__(self):
        if self.m < 1 or self.t < 1:
            raise GeometryError("m and T must be >= 1")
        if self.t <= self.p:
            raise GeometryError(f"need T > p for an invertible noise Gram (T={self.t}, p={self.p})")

    @property
    def beta1(self) -> float:
        """Largest eigenvalue of Sigma^{-1}(A A* + Sigma); 1 when A = 0."""
        if self.mixing is None:
            return 1.0
        aat = self.mixing @ self.mixing.T
        if self.noise_cov is None:
            return float(1.0 + linalg.eigvalsh(aat)[-1])
        return float(pencil_eigenvalues(aat + self.noise_cov, self.noise_cov)[0])

    def roy_analog(self) -> RoySetup:
        """Equivalent Roy geometry: numerator df m, denominator df T."""
        return RoySetup(p=self.p, n=self.m + self.t, q0=self.m, q1=self.m, level=self.level)


def signal_simulate(setup: SignalSetup, seed) -> tuple[np.ndarray, np.ndarray]:
    """Draw observations Y (p x m) and noise-only Z (p x T)."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    p, m, t = setup.p, setup.m, setup.t
    root = None
    if setup.noise_cov is not None:
        w, q = linalg.eigh(setup.noise_cov)
        if w.min() <= 0:
            raise SingularMatrixError("noise covariance must be positive definite")
        root = (q * np.sqrt(w)) @ q.T
    e = rng.standard_normal((p, m))
    y = e if root is None else root @ e
    if setup.mixing is not None:
        k = setup.mixing.shape[1]
        y = y + setup.mixing @ rng.standard_normal((k, m))
    r = rng.standard_normal((p, t))
    z = r if root is None else root @ r
    return y, z


def signal_fisher(y: np.ndarray, z: np.ndarray, m: int, t: int) -> FisherSpectrum:
    """Spectrum of (T/m)(ZZ*)^{-1}(YY*) via the pencil (YY*/m, ZZ*/T)."""
    p = y.shape[0]
    if z.shape[0] != p:
        raise GeometryError("Y and Z must share the row dimension")
    s1 = y @ y.T / m
    s2 = z @ z.T / t
    eigs = pencil_eigenvalues((s1 + s1.T) / 2.0, (s2 + s2.T) / 2.0)
    return FisherSpectrum(eigs=eigs, p=p, n1=m, n2=t)


def signal_power(beta1: float, setup: SignalSetup) -> float:
    """Analytic detection power at signal strength beta1 (classification-aware)."""
    if beta1 < 1.0:
        raise GeometryError("beta1 >= 1 by construction")
    roy = setup.roy_analog()
    if beta1 == 1.0:
        return float(1.0 - tw1_cdf(roy.tw_quantile))
    return spike_power(beta1, roy)
