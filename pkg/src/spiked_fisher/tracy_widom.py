"""Tracy-Widom beta=1 cdf and quantiles from an embedded high-accuracy table."""
from __future__ import annotations

import numpy as np
from scipy.interpolate import PchipInterpolator

from ._tw1_table import _F, _X
from .errors import QuantileRangeError

_CDF = PchipInterpolator(_X, _F, extrapolate=False)
# strictly increasing region for inversion
_INV = PchipInterpolator(_F, _X, extrapolate=False)


def tw1_cdf(x) -> np.ndarray | float:
    """F1(x), clipped to [0, 1] outside the table range."""
    x = np.asarray(x, dtype=np.float64)
    out = _CDF(np.clip(x, _X[0], _X[-1]))
    out = np.where(x < _X[0], 0.0, np.where(x > _X[-1], 1.0, out))
    return float(out) if out.ndim == 0 else out


def tw1_quantile(prob: float) -> float:
    """Quantile of the beta=1 Tracy-Widom law; monotone-cubic interpolation.

    Valid for probabilities covered by the table (roughly 1e-13 to
    1 - 2e-6); outside that range a QuantileRangeError is raised.
    """
    if not 0.0 < prob < 1.0:
        raise QuantileRangeError("probability must lie strictly in (0, 1)")
    if prob < _F[0] or prob > _F[-1]:
        raise QuantileRangeError(
            f"probability {prob} outside the tabulated range [{_F[0]:.2e}, {_F[-1]:.8f}]"
        )
    return float(_INV(prob))
