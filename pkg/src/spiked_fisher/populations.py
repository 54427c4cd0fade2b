"""Seeded population sampling and entrywise truncation.

Three unit-variance laws are supported: standard Gaussian, Rademacher
(+/-1 with probability 1/2 each, fourth moment exactly 1), and t(4)/sqrt(2)
(unit variance, infinite fourth moment).  Truncation clips entries at
eta*sqrt(n) and recenters/rescales to empirical mean 0, variance 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate, stats

from .errors import DegenerateTruncationError, InvalidDimensionError

POPULATION_NAMES = ("gaussian", "rademacher", "t4scaled")


@dataclass(frozen=True)
class PopulationKind:
    """A population law for the i.i.d. data entries.

    ``q`` is 1 for real-valued data, 0 for complex; only the real case is
    sampled, the flag merely parameterizes downstream variance formulas.
    """

    law: str
    q: int = 1

    def __post_init__(self):
        if self.law not in POPULATION_NAMES:
            raise InvalidDimensionError(
                f"unknown population law {self.law!r}; expected one of {POPULATION_NAMES}"
            )
        if self.q not in (0, 1):
            raise InvalidDimensionError("q flag must be 0 (complex) or 1 (real)")


GAUSSIAN = PopulationKind("gaussian")
RADEMACHER = PopulationKind("rademacher")
T4_SCALED = PopulationKind("t4scaled")


@dataclass(frozen=True)
class TruncationConfig:
    """Threshold eta*sqrt(n) for entrywise truncation."""

    eta: float = 2.0
    n: int = 1

    def __post_init__(self):
        if self.eta <= 0 or self.n < 1:
            raise InvalidDimensionError("eta must be positive and n >= 1")

    @property
    def threshold(self) -> float:
        return self.eta * np.sqrt(self.n)


def stream_rng(base_seed, *key) -> np.random.Generator:
    """Independent generator for stream ``key`` under a base seed.

    Distinct keys give decorrelated streams; identical (base_seed, key)
    reproduce bit-identical output, serial or parallel.  Plain
    ``default_rng((a, b))`` must not be used for this: tuple entropy can
    collide with scalar entropy.
    """
    return np.random.default_rng(np.random.SeedSequence(base_seed, spawn_key=key))


def fill_sample(kind: PopulationKind, rng: np.random.Generator, out: np.ndarray,
                tmp: np.ndarray | None = None) -> np.ndarray:
    """Fill ``out`` with i.i.d. entries from ``kind`` without fresh allocations.

    ``tmp`` (same shape) is only needed for the t(4)/sqrt(2) law.  Buffer
    reuse keeps tight replication loops free of large-page churn.
    """
    if kind.law == "gaussian":
        rng.standard_normal(out=out)
        return out
    if kind.law == "rademacher":
        rng.random(out=out)
        np.subtract(out, 0.5, out=out)
        np.sign(out, out=out)
        np.copyto(out, 1.0, where=(out == 0.0))
        return out
    # t(4)/sqrt(2) = Z / sqrt(G) with G ~ Gamma(2, 1), since chi2_4 / 2 = G
    if tmp is None:
        tmp = np.empty_like(out)
    rng.standard_normal(out=out)
    rng.standard_gamma(2.0, out=tmp)
    np.sqrt(tmp, out=tmp)
    np.divide(out, tmp, out=out)
    return out


def sample_matrix(kind: PopulationKind, rows: int, cols: int, seed) -> np.ndarray:
    """Draw a rows x cols array of i.i.d. entries from ``kind``.

    ``seed`` may be an integer, a SeedSequence, or a Generator.
    """
    if rows < 1 or cols < 1:
        raise InvalidDimensionError(f"matrix dimensions must be >= 1, got {rows}x{cols}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return fill_sample(kind, rng, np.empty((rows, cols)))


def truncate_center_rescale(data: np.ndarray, cfg: TruncationConfig) -> np.ndarray:
    """Zero out entries with |x| >= eta*sqrt(n), then recenter and rescale.

    The output has empirical mean 0 and variance 1 (population moments are
    not used).  Raises if the truncated array is constant.
    """
    data = np.asarray(data, dtype=np.float64)
    if data.shape[-1] != cfg.n:
        raise InvalidDimensionError(
            f"cfg.n={cfg.n} must equal the number of columns {data.shape[-1]}"
        )
    clipped = np.where(np.abs(data) < cfg.threshold, data, 0.0)
    sd = clipped.std()
    if sd <= 0.0:
        raise DegenerateTruncationError("all entries truncated; zero variance")
    return (clipped - clipped.mean()) / sd


def _t4_scaled_pdf(x: np.ndarray) -> np.ndarray:
    # density of t(4)/sqrt(2): sqrt(2)*f_t4(sqrt(2) x)
    return np.sqrt(2.0) * stats.t.pdf(np.sqrt(2.0) * x, df=4)


def fourth_moment_params(kind: PopulationKind, cfg: TruncationConfig) -> tuple[float, float]:
    """Truncated fourth moment mu = E[x^4 1{|x| < eta sqrt(n)}] and beta = mu - 2 - q.

    Rademacher is exact, Gaussian analytic, t(4)/sqrt(2) by quadrature
    (finite for any finite threshold despite the infinite raw moment).
    """
    c = cfg.threshold
    if kind.law == "rademacher":
        mu = 1.0 if c > 1.0 else 0.0
    elif kind.law == "gaussian":
        # int_{-c}^{c} x^4 phi(x) dx = 3(2 Phi(c) - 1) - 2 phi(c) (c^3 + 3c)
        mu = 3.0 * (2.0 * stats.norm.cdf(c) - 1.0) - 2.0 * stats.norm.pdf(c) * (c**3 + 3.0 * c)
    else:
        mu = 2.0 * integrate.quad(lambda x: x**4 * _t4_scaled_pdf(x), 0.0, c, limit=200)[0]
    return mu, mu - 2.0 - kind.q
