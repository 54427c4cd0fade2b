"""Data-driven estimation of the largest population spike and its test statistic.

Pipeline: select the neighborhood J1 of the top sample eigenvalue, estimate
m and its companion at l_1 from the remaining spectrum, invert the
fixed-point relation 1 + c2 l m(l) + m_under(l) alpha = 0 for alpha-hat, map
through the phase transition for psi-hat, then plug moment estimates at
psi-hat into the theta/phi/nu formulas for sigma-hat and the standardized
statistic sqrt(p) (l_1/psi-hat - 1)/sigma-hat.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clt import StieltjesMoments, nu_factors, phi, stieltjes_moments_empirical, theta
from .errors import EstimateError, SampleSizeError
from .phase import BulkMeasure, psi_n
from .spectra import FisherSpectrum


@dataclass(frozen=True)
class SpikeEstimate:
    alpha_hat: float
    psi_hat: float
    j1: np.ndarray
    moments_at_l1: StieltjesMoments
    moments_at_psi: StieltjesMoments
    theta_hat: float
    phi_hat: float
    nu1_hat: float
    nu2_hat: float
    sigma_hat: float
    lambda1_stat: float


def select_j1(eigs: np.ndarray, threshold: float = 0.2) -> np.ndarray:
    """Indices i with |l_i - l_1| / |l_1| <= threshold (always contains 0)."""
    eigs = np.asarray(eigs, dtype=np.float64)
    if len(eigs) == 0:
        raise SampleSizeError("empty spectrum")
    r = np.abs(eigs - eigs[0]) / abs(eigs[0])
    return np.flatnonzero(r <= threshold)


def estimate_alpha1(
    spectrum: FisherSpectrum,
    threshold: float = 0.2,
    bulk: BulkMeasure | None = None,
    sum_over_complement_at_psi: bool = False,
) -> SpikeEstimate:
    """Estimate alpha_1, psi_1, sigma_1 and the standardized top eigenvalue.

    The moment sums at psi-hat run over J1 with 1/p normalization by default;
    ``sum_over_complement_at_psi`` flips them to the bulk complement, which
    is the variant that actually estimates the LSD transforms.
    """
    eigs = spectrum.eigs
    p = spectrum.p
    c1, c2 = spectrum.c_n1, spectrum.c_n2
    l1 = eigs[0]
    j1 = select_j1(eigs, threshold)
    if len(j1) >= p:
        raise EstimateError("J1 swallowed the whole spectrum; no bulk left")
    sm_l1 = stieltjes_moments_empirical(l1, eigs, c1, exclude=j1)
    if sm_l1.m_under == 0.0:
        raise EstimateError("degenerate companion transform at l_1")
    alpha_hat = -(1.0 + c2 * l1 * sm_l1.m) / sm_l1.m_under
    if bulk is None:
        bulk = BulkMeasure.point_mass(1.0)
    psi_hat = psi_n(alpha_hat, c1, c2, bulk)
    if sum_over_complement_at_psi:
        mask = np.ones(p, dtype=bool)
        mask[j1] = False
        sm_psi = stieltjes_moments_empirical(
            psi_hat, eigs, c1, include=np.flatnonzero(mask), denominator=p
        )
    else:
        sm_psi = stieltjes_moments_empirical(psi_hat, eigs, c1, include=j1, denominator=p)
    th = theta(alpha_hat, psi_hat, c1, c2, sm_psi)
    ph = phi(alpha_hat, psi_hat, c2, sm_psi)
    nu1, nu2 = nu_factors(alpha_hat, psi_hat, c1, c2, sm_psi)
    sigma_sq = 2.0 * th / ph**2
    if sigma_sq <= 0.0 or not np.isfinite(sigma_sq):
        raise EstimateError(f"nonpositive variance estimate sigma^2={sigma_sq}")
    lam1 = lambda1_statistic(l1, psi_hat, np.sqrt(sigma_sq), p)
    return SpikeEstimate(
        alpha_hat=float(alpha_hat),
        psi_hat=float(psi_hat),
        j1=j1,
        moments_at_l1=sm_l1,
        moments_at_psi=sm_psi,
        theta_hat=float(th),
        phi_hat=float(ph),
        nu1_hat=float(nu1),
        nu2_hat=float(nu2),
        sigma_hat=float(np.sqrt(sigma_sq)),
        lambda1_stat=float(lam1),
    )


def lambda1_statistic(l1: float, psi_hat: float, sigma_hat: float, p: int) -> float:
    """Lambda_1 = sqrt(p) (l_1/psi - 1) / sigma, the asymptotically N(0,1) form."""
    if sigma_hat <= 0:
        raise EstimateError("sigma_hat must be positive")
    return float(np.sqrt(p) * (l1 / psi_hat - 1.0) / sigma_hat)


def sigma_hat_with_betas(est: SpikeEstimate, beta_x: float, beta_y: float) -> float:
    """Variance under the weakened fourth-moment assumption (q = 1)."""
    sigma_sq = (2.0 * est.theta_hat + beta_x * est.nu1_hat + beta_y * est.nu2_hat) / est.phi_hat**2
    if sigma_sq <= 0:
        raise EstimateError(f"nonpositive variance estimate sigma^2={sigma_sq}")
    return float(np.sqrt(sigma_sq))
