"""Sample covariance pairs and the spectrum of F = S1 S2^{-1}."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg
from scipy.linalg import lapack

from .covariance import CovariancePair, SpikeSpec
from .errors import GroupingConflictError, InvalidDimensionError, SingularMatrixError


@dataclass(frozen=True)
class FisherSpectrum:
    """Descending eigenvalues of F = S1 S2^{-1} with the sample geometry."""

    eigs: np.ndarray
    p: int
    n1: int
    n2: int

    def __post_init__(self):
        eigs = np.asarray(self.eigs, dtype=np.float64)
        object.__setattr__(self, "eigs", eigs)
        if len(eigs) != self.p:
            raise InvalidDimensionError("need exactly p eigenvalues")
        if np.any(np.diff(eigs) > 1e-10 * max(1.0, np.abs(eigs).max())):
            raise InvalidDimensionError("eigenvalues must be sorted descending")
        if self.n2 <= self.p:
            raise SingularMatrixError(f"need n2 > p for an invertible S2 (n2={self.n2}, p={self.p})")

    @property
    def c_n1(self) -> float:
        return self.p / self.n1

    @property
    def c_n2(self) -> float:
        return self.p / self.n2


def sample_covariances(
    X: np.ndarray, Y: np.ndarray, pair: CovariancePair
) -> tuple[np.ndarray, np.ndarray]:
    """S1 = Sigma1^{1/2} (XX*/n1) Sigma1^{1/2} and likewise S2 from Y."""
    p = pair.p
    if X.shape[0] != p or Y.shape[0] != p:
        raise InvalidDimensionError("X and Y must have p rows")
    n1, n2 = X.shape[1], Y.shape[1]
    if n2 <= p:
        raise SingularMatrixError(f"need n2 > p for an invertible S2 (n2={n2}, p={p})")
    a = pair.sigma1_sqrt() @ X
    s1 = a @ a.T / n1
    if pair.sigma2_is_identity():
        s2 = Y @ Y.T / n2
    else:
        b = pair.sigma2_sqrt() @ Y
        s2 = b @ b.T / n2
    return (s1 + s1.T) / 2.0, (s2 + s2.T) / 2.0


def pencil_eigenvalues(s1: np.ndarray, s2: np.ndarray, cond_limit: float = 1e12) -> np.ndarray:
    """Descending eigenvalues of the symmetric-definite pencil (S1, S2).

    Reduces via the Cholesky factor L of S2 to a symmetric eigenproblem for
    L^{-1} S1 L^{-T}; S2 with reciprocal condition below 1/cond_limit is
    rejected.
    """
    p = s1.shape[0]
    if s2.shape != (p, p):
        raise InvalidDimensionError("S1 and S2 must be square and conformable")
    c, info = lapack.dpotrf(s2, lower=1)
    if info != 0:
        raise SingularMatrixError("S2 is not positive definite")
    anorm = np.abs(s2).sum(axis=0).max()
    rcond, info = lapack.dpocon(c, anorm, uplo="L")
    if info != 0 or rcond < 1.0 / cond_limit:
        raise SingularMatrixError(f"S2 is ill-conditioned (rcond={rcond:.3e})")
    w = linalg.solve_triangular(c, s1, lower=True, check_finite=False)
    w = linalg.solve_triangular(c, w.T, lower=True, check_finite=False)
    return np.sort(linalg.eigvalsh((w + w.T) / 2.0, check_finite=False))[::-1]


def fisher_eigenvalues(s1: np.ndarray, s2: np.ndarray, n1: int, n2: int) -> FisherSpectrum:
    """FisherSpectrum of F = S1 S2^{-1} for sample sizes (n1, n2)."""
    eigs = pencil_eigenvalues(s1, s2)
    return FisherSpectrum(eigs=eigs, p=s1.shape[0], n1=n1, n2=n2)


def largest_group(
    spectrum: FisherSpectrum, spec: SpikeSpec, psi_values
) -> dict[int, np.ndarray]:
    """Map each spike k to the indices of its sample-eigenvalue packet.

    Spike k with multiplicity m_k claims the m_k indices nearest to its
    predicted limit psi_values[k] in relative distance.  Overlapping claims
    raise, since they mean the packets are not separated.
    """
    psi_values = np.asarray(psi_values, dtype=np.float64)
    if len(psi_values) != spec.n_distinct:
        raise InvalidDimensionError("one psi value per distinct spike required")
    out: dict[int, np.ndarray] = {}
    claimed = np.zeros(spectrum.p, dtype=bool)
    for k, (_, mult) in enumerate(spec.spikes):
        rel = np.abs(spectrum.eigs / psi_values[k] - 1.0)
        chosen = np.sort(np.argsort(rel)[:mult])
        if np.any(claimed[chosen]):
            raise GroupingConflictError(
                f"spike {k} claims already-assigned eigenvalue indices {chosen}"
            )
        claimed[chosen] = True
        out[k] = chosen
    return out
