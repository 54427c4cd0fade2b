"""Phase-transition map psi for spiked Fisher matrices.

psi(alpha) = alpha * (1 - c1 * int t/(t-alpha) dH) / (1 + c2 * int alpha/(t-alpha) dH)

is the almost-sure limit of a distant sample spiked eigenvalue.  A spike is
"distant" (detectable) when psi'(alpha) > 0; otherwise the sample eigenvalue
is absorbed at the bulk edge, the value of psi at the nearest critical point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ClassificationError, DomainError, PoleError

_ATOM_TOL = 1e-10


class BulkMeasure:
    """Discrete probability measure for the non-spiked eigenvalues.

    Covers point masses and empirical eigenvalue lists; integrals against it
    are exact finite sums.
    """

    def __init__(self, atoms, weights=None):
        atoms = np.atleast_1d(np.asarray(atoms, dtype=np.float64))
        if weights is None:
            weights = np.full(atoms.shape, 1.0 / len(atoms))
        weights = np.asarray(weights, dtype=np.float64)
        if atoms.min() <= 0:
            raise DomainError("bulk atoms must be positive")
        if abs(weights.sum() - 1.0) > 1e-12 or weights.min() < 0:
            raise DomainError("weights must be nonnegative and sum to 1")
        self.atoms = atoms
        self.weights = weights

    @classmethod
    def point_mass(cls, t0: float = 1.0) -> "BulkMeasure":
        return cls([t0], [1.0])

    @classmethod
    def from_values(cls, values) -> "BulkMeasure":
        return cls(values)

    def support_min(self) -> float:
        return float(self.atoms.min())

    def support_max(self) -> float:
        return float(self.atoms.max())

    def contains(self, alpha: float) -> bool:
        return bool(np.min(np.abs(self.atoms - alpha)) <= _ATOM_TOL * max(1.0, abs(alpha)))

    def integrate(self, f) -> float:
        return float(np.sum(self.weights * f(self.atoms)))


class SpikeClass(enum.Enum):
    DISTANT = "distant"
    ABSORBED_UPPER = "absorbed_upper"
    ABSORBED_LOWER = "absorbed_lower"


@dataclass(frozen=True)
class PhaseResult:
    alpha: float
    psi: float
    psi_prime: float
    classification: SpikeClass
    rho: float


def psi(alpha: float, c1: float, c2: float, bulk: BulkMeasure) -> float:
    """Limit of a distant sample spike; raises off the detectable domain checks.

    alpha must lie outside the atom set of the bulk; the denominator must not
    vanish (pole of the map).
    """
    if bulk.contains(alpha):
        raise DomainError(f"alpha={alpha} lies in the bulk support")
    num = 1.0 - c1 * bulk.integrate(lambda t: t / (t - alpha))
    den = 1.0 + c2 * bulk.integrate(lambda t: alpha / (t - alpha))
    if abs(den) < 1e-12:
        raise PoleError(f"phase map pole at alpha={alpha}")
    return alpha * num / den


def psi_n(alpha: float, c_n1: float, c_n2: float, bulk_n: BulkMeasure) -> float:
    """Finite-n variant: same map at the observed ratios and empirical bulk."""
    return psi(alpha, c_n1, c_n2, bulk_n)


def psi_prime(alpha: float, c1: float, c2: float, bulk: BulkMeasure) -> float:
    """Central-difference derivative of psi, Richardson-validated.

    Two step sizes must agree to 1e-6 relative; the step adapts down near the
    bulk support.
    """
    gap = np.min(np.abs(bulk.atoms - alpha))
    h0 = min(1e-5 * max(abs(alpha), 1.0), 0.25 * gap)
    if h0 <= 0:
        raise DomainError("alpha touches the bulk support")
    est_prev = None
    h = h0
    for _ in range(12):
        d1 = (psi(alpha + h, c1, c2, bulk) - psi(alpha - h, c1, c2, bulk)) / (2 * h)
        d2 = (psi(alpha + h / 2, c1, c2, bulk) - psi(alpha - h / 2, c1, c2, bulk)) / h
        richardson = (4 * d2 - d1) / 3
        scale = max(abs(richardson), 1e-12)
        if abs(d2 - d1) <= 1e-6 * scale:
            return richardson
        est_prev = richardson
        h /= 4
    if est_prev is None:
        raise DomainError("derivative step adaptation failed")
    return est_prev


def classify_spike(alpha: float, c1: float, c2: float, bulk: BulkMeasure) -> PhaseResult:
    """Distant/absorbed classification of Proposition-style limits.

    Distant spikes carry rho = psi(alpha).  Otherwise the nearest critical
    point of psi (root of psi', located by bisection to 1e-10) gives
    rho = psi(critical); the side names which bulk edge absorbs the spike.
    """
    val = psi(alpha, c1, c2, bulk)
    der = psi_prime(alpha, c1, c2, bulk)
    if der > 0:
        return PhaseResult(alpha, val, der, SpikeClass.DISTANT, val)
    lo, hi = bulk.support_min(), bulk.support_max()
    if alpha > hi:
        # critical point sits above alpha, absorbed at the upper sample edge
        crit = _bisect_prime(alpha, _expand_up(alpha, c1, c2, bulk), c1, c2, bulk)
        return PhaseResult(
            alpha, val, der, SpikeClass.ABSORBED_UPPER, psi(crit, c1, c2, bulk)
        )
    if alpha < lo:
        crit = _bisect_prime(_expand_down(alpha, c1, c2, bulk), alpha, c1, c2, bulk)
        return PhaseResult(
            alpha, val, der, SpikeClass.ABSORBED_LOWER, psi(crit, c1, c2, bulk)
        )
    # spike between bulks: try both sides within the surrounding gap
    below = bulk.atoms[bulk.atoms < alpha].max()
    above = bulk.atoms[bulk.atoms > alpha].min()
    for a, b, side in (
        (alpha, above - 1e-8 * above, SpikeClass.ABSORBED_UPPER),
        (below + 1e-8 * below, alpha, SpikeClass.ABSORBED_LOWER),
    ):
        try:
            crit = _bisect_prime(min(a, b), max(a, b), c1, c2, bulk)
        except ClassificationError:
            continue
        return PhaseResult(alpha, val, der, side, psi(crit, c1, c2, bulk))
    raise ClassificationError(f"no critical point of psi' brackets alpha={alpha}")


def _expand_up(alpha: float, c1: float, c2: float, bulk: BulkMeasure) -> float:
    hi = alpha
    width = max(abs(alpha), 1.0)
    for _ in range(80):
        hi += width
        width *= 1.6
        try:
            if psi_prime(hi, c1, c2, bulk) > 0:
                return hi
        except (DomainError, PoleError):
            continue
    raise ClassificationError("psi' does not change sign above the spike")


def _expand_down(alpha: float, c1: float, c2: float, bulk: BulkMeasure) -> float:
    lo = alpha
    for _ in range(80):
        lo /= 2.0
        try:
            if psi_prime(lo, c1, c2, bulk) > 0:
                return lo
        except (DomainError, PoleError):
            continue
    raise ClassificationError("psi' does not change sign below the spike")


def _bisect_prime(lo: float, hi: float, c1: float, c2: float, bulk: BulkMeasure) -> float:
    """Bisection for psi' = 0 on [lo, hi]; requires a sign change."""
    f_lo = psi_prime(lo, c1, c2, bulk)
    f_hi = psi_prime(hi, c1, c2, bulk)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise ClassificationError("no sign change of psi' on the search interval")
    while hi - lo > 1e-10 * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        f_mid = psi_prime(mid, c1, c2, bulk)
        if f_mid == 0.0:
            return mid
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
