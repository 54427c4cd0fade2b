"""Spiked-eigenvalue inference for large-dimensional Fisher matrices F = S1 S2^{-1}.

Phase-transition limits and CLT parameters for spiked sample eigenvalues,
plug-in spike estimation, the Tracy-Widom calibrated Roy maximum-root test
with analytic power, a signal-detection test, and a seeded Monte Carlo
harness.
"""

__version__ = "0.1.0"

from .applications import (
    LinearModelFit,
    RoySetup,
    SignalSetup,
    fit_mvlm,
    noncentral_spike,
    roy_decide,
    roy_power,
    roy_threshold,
    signal_fisher,
    signal_power,
    signal_simulate,
    spike_power,
)
from .clt import (
    BlockLaw,
    CltParams,
    StieltjesMoments,
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
from .covariance import (
    CovariancePair,
    SpikeSpec,
    TpDecomposition,
    build_case1,
    build_case2,
    decompose_tp,
    toeplitz_eigenvectors,
)
from .errors import SpikedFisherError
from .harness import (
    McReportRow,
    McSamples,
    RoyMcConfig,
    RunConfig,
    SizePowerResult,
    empirical_cdf,
    invariance_ab_test,
    ks_statistic,
    percentile_table,
    reproduce_table1,
    reproduce_table2,
    run_replications,
    size_power_run,
    star_reference_samples,
    table1_report,
)
from .inference import (
    SpikeEstimate,
    estimate_alpha1,
    lambda1_statistic,
    select_j1,
    sigma_hat_with_betas,
)
from .phase import (
    BulkMeasure,
    PhaseResult,
    SpikeClass,
    classify_spike,
    psi,
    psi_n,
    psi_prime,
)
from .populations import (
    GAUSSIAN,
    RADEMACHER,
    T4_SCALED,
    PopulationKind,
    TruncationConfig,
    fill_sample,
    fourth_moment_params,
    sample_matrix,
    stream_rng,
    truncate_center_rescale,
)
from .spectra import (
    FisherSpectrum,
    fisher_eigenvalues,
    largest_group,
    pencil_eigenvalues,
    sample_covariances,
)
from .tracy_widom import tw1_cdf, tw1_quantile
