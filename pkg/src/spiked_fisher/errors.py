"""Exception types raised across the library."""


class SpikedFisherError(ValueError):
    """Base class for all library errors."""


class InvalidDimensionError(SpikedFisherError):
    """Matrix dimensions are empty or inconsistent."""


class DegenerateTruncationError(SpikedFisherError):
    """Truncation removed all variation (zero standard deviation)."""


class InvalidSpikeSpecError(SpikedFisherError):
    """Spike specification violates its invariants (e.g. M > p)."""


class SingularMatrixError(SpikedFisherError):
    """A matrix that must be positive definite is singular or ill-conditioned."""


class DomainError(SpikedFisherError):
    """Evaluation point lies inside the support of the bulk measure / LSD."""


class PoleError(SpikedFisherError):
    """Denominator of the phase-transition map vanishes."""


class ClassificationError(SpikedFisherError):
    """No critical point of psi' could be bracketed for an absorbed spike."""


class GroupingConflictError(SpikedFisherError):
    """Two spikes claim the same sample-eigenvalue index."""


class EstimateError(SpikedFisherError):
    """Spike estimation pipeline hit a degenerate intermediate value."""


class DesignRankError(SpikedFisherError):
    """Regression design matrix is rank deficient."""


class GeometryError(SpikedFisherError):
    """Test geometry is infeasible (e.g. n < p + q0, or c2 >= 1)."""


class QuantileRangeError(SpikedFisherError):
    """Requested probability falls outside the embedded quantile table."""


class SampleSizeError(SpikedFisherError):
    """Not enough samples for the requested summary."""


class ConfigError(SpikedFisherError):
    """Run configuration is invalid or inconsistent."""
