"""CLT quantities for spiked Fisher eigenvalues.

Conventions.  All Stieltjes-type moments use the non-spiked Fisher LSD
F~ (ratios c1 > 0, 0 < c2 < 1, all-ones bulk), density

    f(x) = (1 - c2) sqrt((b - x)(x - a)) / (2 pi x (c1 + c2 x)),  a <= x <= b,
    a, b = ((1 -/+ h)/(1 - c2))^2,  h = sqrt(c1 + c2 - c1 c2),

plus a point mass 1 - 1/c1 at zero when c1 > 1.  The transform is the
standard one, m(lam) = int (x - lam)^{-1} dF~(x), so m < 0 above the bulk;
the companion transform (spectrum of the transposed product) satisfies
m_under = -(1 - c1)/lam + c1 m, second moments  m2 = int (lam - x)^{-2} dF~,
m2_under = (1 - c1)/lam^2 + c1 m2,  and  m3 = int x (lam - x)^{-2} dF~
= lam m2 + m exactly.

The per-spike fluctuation parameters are

    theta = c2 + c2^2 psi^2 m2 + 2 c2^2 psi m + c1 a^2 m2_under + 2 c1 c2 a m3
    phi   = 1 + c2 psi^2 m2 + 2 c2 psi m + a psi m2_under + a m_under
    nu1   = c1 a^2 m_under^2,   nu2 = c2 (1 + c2 psi m)^2

all evaluated at psi = psi_n(a).  A multiplicity-m block of standardized
sample spikes converges to the eigenvalues of -Omega/phi where Omega is
symmetric Gaussian: diagonal variance 2 theta, off-diagonal theta (orthogonal
ensemble case), with fourth-cumulant corrections beta*nu entering through the
eigenvector coordinate sums when the population is non-Gaussian.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GeometryError, InvalidDimensionError, SampleSizeError

_NODES_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _NODES_CACHE:
        t, w = np.polynomial.legendre.leggauss(n)
        _NODES_CACHE[n] = ((t + 1.0) * (np.pi / 4.0), w * (np.pi / 4.0))
    return _NODES_CACHE[n]


def fisher_lsd_support(c1: float, c2: float) -> tuple[float, float]:
    """Support edges [a, b] of the non-spiked Fisher LSD."""
    if c1 <= 0 or not 0.0 < c2 < 1.0:
        raise GeometryError(f"need c1 > 0 and c2 in (0,1), got c1={c1}, c2={c2}")
    h = np.sqrt(c1 + c2 - c1 * c2)
    return ((1.0 - h) / (1.0 - c2)) ** 2, ((1.0 + h) / (1.0 - c2)) ** 2


def fisher_lsd_density(x: np.ndarray, c1: float, c2: float) -> np.ndarray:
    """Continuous part of the Fisher LSD density on [a, b], zero outside."""
    a, b = fisher_lsd_support(c1, c2)
    x = np.asarray(x, dtype=np.float64)
    inside = (x > a) & (x < b)
    out = np.zeros_like(x)
    xi = x[inside]
    out[inside] = (1.0 - c2) * np.sqrt((b - xi) * (xi - a)) / (2.0 * np.pi * xi * (c1 + c2 * xi))
    return out


@dataclass(frozen=True)
class StieltjesMoments:
    """m, companion m_under, and second/cross moments at one point lam."""

    lam: float
    m: float
    m_under: float
    m2: float
    m2_under: float
    m3: float


def stieltjes_moments_quadrature(
    lam: float, c1: float, c2: float, nodes: int = 2048
) -> StieltjesMoments:
    """Moments of the Fisher LSD at lam outside [a, b].

    Uses the edge-absorbing substitution x = a + (b - a) sin^2(theta), which
    removes the square-root endpoint singularities; accuracy is validated by
    node doubling in the test suite.
    """
    a, b = fisher_lsd_support(c1, c2)
    if a <= lam <= b:
        raise DomainError(f"lam={lam} lies inside the LSD support [{a}, {b}]")
    if lam <= 0:
        raise DomainError("lam must be positive")
    th, wth = _gauss_nodes(nodes)
    x = a + (b - a) * np.sin(th) ** 2
    dens = (1 - c2) * (b - a) ** 2 * np.sin(2 * th) ** 2 / (4 * np.pi * x * (c1 + c2 * x))
    wx = dens * wth
    atom = max(0.0, 1.0 - 1.0 / c1)  # zero eigenvalues of the LSD when c1 > 1
    m = float(np.sum(wx / (x - lam)) - atom / lam)
    m2 = float(np.sum(wx / (lam - x) ** 2) + atom / lam**2)
    m3 = float(np.sum(wx * x / (lam - x) ** 2))
    return StieltjesMoments(
        lam=lam,
        m=m,
        m_under=-(1.0 - c1) / lam + c1 * m,
        m2=m2,
        m2_under=(1.0 - c1) / lam**2 + c1 * m2,
        m3=m3,
    )


def stieltjes_moments_empirical(
    lam: float,
    eigs: np.ndarray,
    c1: float,
    exclude=(),
    include=None,
    denominator: int | None = None,
) -> StieltjesMoments:
    """Plug-in moments from an observed spectrum.

    Default form: mean of (l_i - lam)^{-1} over i not in ``exclude`` with
    denominator len(eigs) - len(exclude).  Passing ``include`` instead sums
    over that index set with denominator len(eigs) (the spike-neighborhood
    normalization used at psi-hat).  ``denominator`` overrides either count.
    """
    eigs = np.asarray(eigs, dtype=np.float64)
    if include is not None:
        idx = np.asarray(sorted(include), dtype=int)
        denom = len(eigs) if denominator is None else denominator
    else:
        mask = np.ones(len(eigs), dtype=bool)
        mask[list(exclude)] = False
        idx = np.flatnonzero(mask)
        denom = len(idx) if denominator is None else denominator
    if denom < 1 or len(idx) == 0:
        raise SampleSizeError("no eigenvalues left after exclusion")
    vals = eigs[idx]
    diff = vals - lam
    if np.any(diff == 0.0):
        raise DomainError("an eigenvalue coincides exactly with lam")
    m = float(np.sum(1.0 / diff) / denom)
    m2 = float(np.sum(1.0 / diff**2) / denom)
    m3 = float(np.sum(vals / diff**2) / denom)
    return StieltjesMoments(
        lam=lam,
        m=m,
        m_under=-(1.0 - c1) / lam + c1 * m,
        m2=m2,
        m2_under=(1.0 - c1) / lam**2 + c1 * m2,
        m3=m3,
    )


def theta(alpha: float, psi: float, c1: float, c2: float, sm: StieltjesMoments) -> float:
    """Fluctuation scale of the Omega block entries."""
    return (
        c2
        + c2**2 * psi**2 * sm.m2
        + 2.0 * c2**2 * psi * sm.m
        + c1 * alpha**2 * sm.m2_under
        + 2.0 * c1 * c2 * alpha * sm.m3
    )


def phi(alpha: float, psi: float, c2: float, sm: StieltjesMoments) -> float:
    """Derivative factor mapping Omega fluctuations to eigenvalue fluctuations."""
    return (
        1.0
        + c2 * psi**2 * sm.m2
        + 2.0 * c2 * psi * sm.m
        + alpha * psi * sm.m2_under
        + alpha * sm.m_under
    )


def nu_factors(
    alpha: float, psi: float, c1: float, c2: float, sm: StieltjesMoments
) -> tuple[float, float]:
    """Coefficients of the fourth-cumulant corrections (nu1, nu2)."""
    nu1 = c1 * alpha**2 * sm.m_under**2
    nu2 = c2 * (1.0 + c2 * psi * sm.m) ** 2
    return nu1, nu2


@dataclass(frozen=True)
class BlockLaw:
    """Entry variances of the symmetric Gaussian block for one spike."""

    var_diag: float
    var_offdiag: float


def block_law(
    theta_k: float,
    nu1: float,
    nu2: float,
    beta_x: float = 0.0,
    beta_y: float = 0.0,
    u4_sum: float = 1.0,
    v4_sum: float = 1.0,
    u22_sum: float = 0.0,
    v22_sum: float = 0.0,
    q: int = 1,
) -> BlockLaw:
    """Variances of the Omega block entries.

    With beta_x = beta_y = 0 this is the orthogonal/unitary ensemble law
    (diag (q+1)theta, off-diag theta).  Non-Gaussian populations shift the
    diagonal by beta*nu weighted by the quartic eigenvector sums
    u4_sum = sum_t u_{tk}^4 (1 for coordinate vectors, ~0 for delocalized
    ones) and the off-diagonal by the pair sums u22_sum = sum_t u_ti^2 u_tj^2.
    """
    var_diag = (q + 1) * theta_k + beta_x * u4_sum * nu1 + beta_y * v4_sum * nu2
    var_off = theta_k + beta_x * u22_sum * nu1 + beta_y * v22_sum * nu2
    if var_diag <= 0 or var_off <= 0:
        raise InvalidDimensionError("block variances must be positive")
    return BlockLaw(var_diag=var_diag, var_offdiag=var_off)


@dataclass(frozen=True)
class CltParams:
    """Everything needed to standardize one spike's sample eigenvalues."""

    alpha: float
    psi: float
    theta: float
    phi: float
    nu1: float
    nu2: float
    block: BlockLaw
    q: int = 1

    @property
    def sigma_sq(self) -> float:
        """Variance of the standardized single (multiplicity-1) eigenvalue."""
        return self.block.var_diag / self.phi**2

    @property
    def sigma(self) -> float:
        return float(np.sqrt(self.sigma_sq))


def compute_clt_params(
    alpha: float,
    c1: float,
    c2: float,
    beta_x: float = 0.0,
    beta_y: float = 0.0,
    u4_sum: float = 1.0,
    v4_sum: float = 1.0,
    u22_sum: float = 0.0,
    v22_sum: float = 0.0,
    q: int = 1,
    psi_value: float | None = None,
    nodes: int = 2048,
) -> CltParams:
    """Evaluate psi_n, theta, phi, nu and the block law for one spike.

    ``psi_value`` overrides the all-ones-bulk psi (used when the caller has a
    finite-n psi from an empirical bulk).
    """
    if psi_value is None:
        if abs(alpha - 1.0) < 1e-12:
            raise DomainError("alpha lies in the all-ones bulk")
        psi_value = alpha * (1 - c1 / (1 - alpha)) / (1 + c2 * alpha / (1 - alpha))
    sm = stieltjes_moments_quadrature(psi_value, c1, c2, nodes=nodes)
    th = theta(alpha, psi_value, c1, c2, sm)
    ph = phi(alpha, psi_value, c2, sm)
    nu1, nu2 = nu_factors(alpha, psi_value, c1, c2, sm)
    law = block_law(th, nu1, nu2, beta_x, beta_y, u4_sum, v4_sum, u22_sum, v22_sum, q)
    return CltParams(alpha=alpha, psi=psi_value, theta=th, phi=ph, nu1=nu1, nu2=nu2,
                     block=law, q=q)


def standardize(l: float, psi_n_value: float, p: int, m_total: int) -> float:
    """gamma = sqrt(p - M) (l / psi_n - 1), the renormalized eigenvalue."""
    if psi_n_value == 0.0:
        raise DomainError("psi_n must be nonzero")
    return float(np.sqrt(p - m_total) * (l / psi_n_value - 1.0))


def multi_spike_law(
    m_k: int, block: BlockLaw, phi_k: float, n_draws: int, seed
) -> np.ndarray:
    """Sample the limit law of a multiplicity-m_k spike packet.

    Returns (n_draws, m_k) descending eigenvalues of -Omega/phi with Omega a
    symmetric Gaussian matrix drawn from ``block``.  The 2x2 case uses the
    closed-form eigenvalues; larger blocks fall back to eigh.
    """
    if m_k < 1:
        raise InvalidDimensionError("m_k must be >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    sd_d = np.sqrt(block.var_diag)
    sd_o = np.sqrt(block.var_offdiag)
    if m_k == 1:
        return (-sd_d / phi_k) * rng.standard_normal((n_draws, 1))
    if m_k == 2:
        d = sd_d * rng.standard_normal((n_draws, 2))
        o = sd_o * rng.standard_normal(n_draws)
        mean = (d[:, 0] + d[:, 1]) / 2.0
        split = np.sqrt(((d[:, 0] - d[:, 1]) / 2.0) ** 2 + o**2)
        eig_hi = mean + split
        eig_lo = mean - split
        out = np.column_stack([-eig_lo, -eig_hi]) / phi_k
        return out
    out = np.empty((n_draws, m_k))
    for i in range(n_draws):
        g = np.zeros((m_k, m_k))
        iu = np.triu_indices(m_k, 1)
        g[iu] = sd_o * rng.standard_normal(len(iu[0]))
        g = g + g.T
        np.fill_diagonal(g, sd_d * rng.standard_normal(m_k))
        out[i] = np.sort(np.linalg.eigvalsh(-g / phi_k))[::-1]
    return out
