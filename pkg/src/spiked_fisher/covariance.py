"""Population covariance pairs (Sigma1, Sigma2) and the transfer matrix T_p.

Case I:  Sigma2 = I, Sigma1 diagonal with the spikes inserted among ones.
Case II: Sigma2 = I, Sigma1 = U0 Lambda U0' where U0 holds the eigenvectors
of the Toeplitz matrix (rho^|i-j|) and Lambda is the Case-I diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import linalg

from .errors import InvalidSpikeSpecError, SingularMatrixError


@dataclass(frozen=True)
class SpikeSpec:
    """Population spikes (value, multiplicity) plus dimension and bulk value.

    Spikes are the eigenvalues of T_p* T_p separated from the bulk; they may
    lie above or below it.  ``bulk_value`` is the non-spiked eigenvalue
    (all-ones point mass by default).
    """

    spikes: tuple[tuple[float, int], ...]
    p: int
    bulk_value: float = 1.0

    def __post_init__(self):
        spikes = tuple((float(a), int(m)) for a, m in self.spikes)
        object.__setattr__(self, "spikes", spikes)
        if self.p < 1:
            raise InvalidSpikeSpecError("p must be >= 1")
        if any(a <= 0 or m < 1 for a, m in spikes):
            raise InvalidSpikeSpecError("spike values must be > 0 with multiplicity >= 1")
        if any(abs(a - self.bulk_value) < 1e-12 for a, _ in spikes):
            raise InvalidSpikeSpecError("spikes must lie outside the bulk")
        if list(spikes) != sorted(spikes, key=lambda s: -s[0]):
            raise InvalidSpikeSpecError("spikes must be ordered descending in value")
        if self.total_multiplicity > self.p:
            raise InvalidSpikeSpecError(
                f"sum of multiplicities {self.total_multiplicity} exceeds p={self.p}"
            )

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.spikes)

    @property
    def n_distinct(self) -> int:
        return len(self.spikes)

    def eigenvalues(self) -> np.ndarray:
        """All p population eigenvalues of T_p* T_p in descending order."""
        vals = [a for a, m in self.spikes for _ in range(m)]
        vals.extend([self.bulk_value] * (self.p - len(vals)))
        return np.sort(np.asarray(vals))[::-1]

    def spike_values(self) -> np.ndarray:
        return np.asarray([a for a, _ in self.spikes])

    def multiplicities(self) -> np.ndarray:
        return np.asarray([m for _, m in self.spikes])


@dataclass
class CovariancePair:
    """(Sigma1, Sigma2), both symmetric positive definite."""

    sigma1: np.ndarray
    sigma2: np.ndarray
    _sqrt1: np.ndarray | None = field(default=None, repr=False)
    _sqrt2: np.ndarray | None = field(default=None, repr=False)
    _ident2: bool | None = field(default=None, repr=False)

    def __post_init__(self):
        for name, s in (("sigma1", self.sigma1), ("sigma2", self.sigma2)):
            if s.ndim != 2 or s.shape[0] != s.shape[1]:
                raise InvalidSpikeSpecError(f"{name} must be square")
            if np.abs(s - s.T).max() > 1e-12 * max(1.0, np.abs(s).max()):
                raise InvalidSpikeSpecError(f"{name} must be symmetric")

    @property
    def p(self) -> int:
        return self.sigma1.shape[0]

    def sigma1_sqrt(self) -> np.ndarray:
        if self._sqrt1 is None:
            self._sqrt1 = _spd_sqrt(self.sigma1)
        return self._sqrt1

    def sigma2_sqrt(self) -> np.ndarray:
        if self._sqrt2 is None:
            self._sqrt2 = _spd_sqrt(self.sigma2)
        return self._sqrt2

    def sigma1_is_diagonal(self) -> bool:
        return bool(np.count_nonzero(self.sigma1 - np.diag(np.diagonal(self.sigma1))) == 0)

    def sigma2_is_identity(self) -> bool:
        if self._ident2 is None:
            self._ident2 = bool(np.array_equal(self.sigma2, np.eye(self.p)))
        return self._ident2


@dataclass(frozen=True)
class TpDecomposition:
    """Singular value decomposition T_p = U diag(D1, D2)^{1/2} V'.

    ``u1``/``v1`` hold the M spike columns, ``d1`` the spiked eigenvalues of
    T_p* T_p and ``d2`` the bulk ones.
    """

    u: np.ndarray
    v: np.ndarray
    d1: np.ndarray
    d2: np.ndarray

    @property
    def u1(self) -> np.ndarray:
        return self.u[:, : len(self.d1)]

    @property
    def v1(self) -> np.ndarray:
        return self.v[:, : len(self.d1)]


def _spd_sqrt(mat: np.ndarray) -> np.ndarray:
    w, q = linalg.eigh(mat)
    if w.min() <= 0:
        raise SingularMatrixError("matrix is not positive definite")
    return (q * np.sqrt(w)) @ q.T


def build_case1(spec: SpikeSpec) -> CovariancePair:
    """Sigma2 = I, Sigma1 = diag of the descending population eigenvalues."""
    return CovariancePair(np.diag(spec.eigenvalues()), np.eye(spec.p))


def toeplitz_eigenvectors(p: int, rho: float) -> np.ndarray:
    """Eigenvector matrix (ascending eigenvalue order) of (rho^|i-j|)."""
    if not 0.0 < rho < 1.0:
        raise InvalidSpikeSpecError("rho must lie in (0, 1)")
    _, vec = linalg.eigh(linalg.toeplitz(rho ** np.arange(p)))
    return vec


def build_case2(spec: SpikeSpec, rho: float) -> CovariancePair:
    """Sigma2 = I, Sigma1 = U0 Lambda U0' with U0 from the (rho^|i-j|) Toeplitz."""
    u0 = toeplitz_eigenvectors(spec.p, rho)
    lam = spec.eigenvalues()
    sigma1 = (u0 * lam) @ u0.T
    return CovariancePair((sigma1 + sigma1.T) / 2.0, np.eye(spec.p))


def decompose_tp(pair: CovariancePair, spec: SpikeSpec) -> TpDecomposition:
    """SVD of T_p = Sigma1^{1/2} Sigma2^{-1/2} with spikes listed first.

    Spike membership is decided by matching eigenvalues of T_p* T_p to the
    declared SpikeSpec (nearest in relative distance), not by magnitude, so
    spikes below the bulk are handled.
    """
    p = pair.p
    if spec.total_multiplicity >= p and spec.total_multiplicity > 0:
        raise InvalidSpikeSpecError("need M < p")
    s2_sqrt_inv = _spd_inv_sqrt(pair.sigma2)
    tp = pair.sigma1_sqrt() @ s2_sqrt_inv
    u, sv, vt = linalg.svd(tp)
    vals = sv**2  # eigenvalues of T_p* T_p, descending
    order = _spike_first_order(vals, spec)
    m_tot = spec.total_multiplicity
    return TpDecomposition(
        u=u[:, order], v=vt.T[:, order], d1=vals[order[:m_tot]], d2=vals[order[m_tot:]]
    )


def _spd_inv_sqrt(mat: np.ndarray) -> np.ndarray:
    w, q = linalg.eigh(mat)
    if w.min() <= 0:
        raise SingularMatrixError("sigma2 is not positive definite")
    return (q / np.sqrt(w)) @ q.T


def _spike_first_order(vals: np.ndarray, spec: SpikeSpec) -> np.ndarray:
    """Indices of ``vals`` with the declared spikes first, bulk after."""
    taken = np.zeros(len(vals), dtype=bool)
    front: list[int] = []
    for alpha, mult in spec.spikes:
        rel = np.abs(vals - alpha) / abs(alpha)
        rel[taken] = np.inf
        chosen = np.argsort(rel)[:mult]
        taken[chosen] = True
        front.extend(sorted(chosen.tolist()))
    rest = [i for i in range(len(vals)) if not taken[i]]
    return np.asarray(front + rest, dtype=int)
