"""Replication engine and report generation.

Runs seeded replications of the spiked-Fisher simulation, standardizes the
grouped sample spikes, and produces percentile/KS reports, invariance A/B
comparisons, and empirical size/power tables for the Roy test.  Replications
are seeded counter-style (base_seed, index), so serial and thread-pool runs
produce byte-identical outputs.
"""
from __future__ import annotations

import contextlib
import csv
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import linalg, stats
from scipy.linalg import lapack

from .applications import RoySetup, roy_threshold, spike_power
from .clt import BlockLaw, CltParams, compute_clt_params, multi_spike_law
from .covariance import SpikeSpec, build_case1, build_case2, decompose_tp
from .errors import (
    ConfigError,
    GroupingConflictError,
    SampleSizeError,
    SingularMatrixError,
)
from .phase import BulkMeasure, psi_n
from .populations import (
    PopulationKind,
    TruncationConfig,
    fill_sample,
    fourth_moment_params,
    stream_rng,
)
from .spectra import FisherSpectrum, largest_group

PERCENTILE_PROBS = (0.01, 0.05, 0.10, 0.25, 0.50, 0.75, 0.90, 0.95, 0.99)


def _blas_single_thread():
    # pinned BLAS threading keeps replication arithmetic identical for every
    # jobs setting; without the pin, byte-identity across jobs is not assured
    try:
        from threadpoolctl import threadpool_limits

        return threadpool_limits(limits=1)
    except ImportError:
        return contextlib.nullcontext()


@dataclass(frozen=True)
class RunConfig:
    """One simulation scenario: covariance case, populations, geometry, seeds."""

    spikes: tuple[tuple[float, int], ...] = ((20.0, 1), (0.2, 2), (0.1, 1))
    p: int = 200
    n1: int = 1000
    n2: int = 400
    case: str = "I"
    rho: float = 0.5
    population_x: str = "gaussian"
    population_y: str = "gaussian"
    replications: int = 1000
    base_seed: int = 0
    jobs: int = 1
    dump_spectra: bool = False

    def __post_init__(self):
        if self.case not in ("I", "II"):
            raise ConfigError("case must be 'I' or 'II'")
        if self.replications < 1:
            raise ConfigError("replications must be >= 1")
        if self.n2 <= self.p:
            raise ConfigError("need n2 > p")

    @classmethod
    def from_json(cls, path) -> "RunConfig":
        raw = json.loads(Path(path).read_text())
        spikes = tuple((float(a), int(m)) for a, m in raw.pop("spikes"))
        return cls(spikes=spikes, **raw)

    def spike_spec(self) -> SpikeSpec:
        return SpikeSpec(spikes=self.spikes, p=self.p)

    def geometry_key(self) -> tuple:
        return (self.spikes, self.p, self.n1, self.n2, self.case, self.rho)


@dataclass
class McSamples:
    """Per-replication standardized records for every distinct spike."""

    config: RunConfig
    params: list[CltParams]
    gammas: list[np.ndarray]         # spike k -> (n_effective, m_k), raw gamma
    n_effective: int
    n_failed: int
    spectra: np.ndarray | None = None

    def gamma_std(self, k: int) -> np.ndarray:
        """sigma-standardized gamma for a multiplicity-1 spike."""
        if self.gammas[k].shape[1] != 1:
            raise ConfigError("gamma_std applies to multiplicity-1 spikes")
        return self.gammas[k][:, 0] / self.params[k].sigma

    def gamma_star(self, k: int) -> np.ndarray:
        """Packet average of the raw gammas (multiplicity >= 2 statistic)."""
        return self.gammas[k].mean(axis=1)


def _scenario_params(config: RunConfig) -> tuple:
    """Covariance pair, per-spike psi_n and CLT parameters for a scenario."""
    spec = config.spike_spec()
    pair = build_case1(spec) if config.case == "I" else build_case2(spec, config.rho)
    dec = decompose_tp(pair, spec)
    c1, c2 = config.p / config.n1, config.p / config.n2
    bulk = BulkMeasure.point_mass(1.0)
    pop_x = PopulationKind(config.population_x)
    pop_y = PopulationKind(config.population_y)
    beta_x = fourth_moment_params(pop_x, TruncationConfig(1.0, config.n1))[1]
    beta_y = fourth_moment_params(pop_y, TruncationConfig(1.0, config.n2))[1]
    params = []
    offset = 0
    for alpha, mult in spec.spikes:
        cols = slice(offset, offset + mult)
        u4 = float(np.mean(np.sum(dec.u1[:, cols] ** 4, axis=0)))
        v4 = float(np.mean(np.sum(dec.v1[:, cols] ** 4, axis=0)))
        params.append(
            compute_clt_params(
                alpha, c1, c2,
                beta_x=beta_x, beta_y=beta_y, u4_sum=u4, v4_sum=v4,
                psi_value=psi_n(alpha, c1, c2, bulk),
            )
        )
        offset += mult
    return spec, pair, params


class _Workspace:
    """Preallocated per-thread buffers for the replication hot loop."""

    def __init__(self, p: int, n1: int, n2: int):
        self.x = np.empty((p, n1))
        self.y = np.empty((p, n2))
        self._flat = np.empty(p * max(n1, n2))
        self.a = np.empty((p, n1))
        self.s1 = np.empty((p, p))
        self.s2 = np.empty((p, p))

    def tmp(self, p: int, n: int) -> np.ndarray:
        """C-contiguous scratch view of shape (p, n)."""
        return self._flat[: p * n].reshape(p, n)


def _fisher_eigs_fast(ws: _Workspace, pair, sqrt1_diag, n1: int, n2: int) -> np.ndarray:
    """Descending pencil eigenvalues from the workspace-resident samples.

    Numerically identical to sample_covariances + pencil_eigenvalues up to
    BLAS rounding; validated against the public path in the test suite.
    """
    if sqrt1_diag is not None:
        np.multiply(ws.x, sqrt1_diag[:, None], out=ws.a)
    else:
        np.matmul(pair.sigma1_sqrt(), ws.x, out=ws.a)
    np.matmul(ws.a, ws.a.T, out=ws.s1)
    ws.s1 *= 1.0 / n1
    if pair.sigma2_is_identity():
        np.matmul(ws.y, ws.y.T, out=ws.s2)
        ws.s2 *= 1.0 / n2
    else:
        b = pair.sigma2_sqrt() @ ws.y
        np.matmul(b, b.T, out=ws.s2)
        ws.s2 *= 1.0 / n2
    anorm = np.abs(ws.s2).sum(axis=0).max()
    c, info = lapack.dpotrf(ws.s2, lower=1)
    if info != 0:
        raise SingularMatrixError("S2 is not positive definite")
    rcond, info = lapack.dpocon(c, anorm, uplo="L")
    if info != 0 or rcond < 1e-12:
        raise SingularMatrixError(f"S2 is ill-conditioned (rcond={rcond:.3e})")
    w = linalg.solve_triangular(c, ws.s1, lower=True, check_finite=False)
    w = linalg.solve_triangular(c, w.T, lower=True, check_finite=False)
    eigs = linalg.eigvalsh(w, driver="evd", overwrite_a=True, check_finite=False)
    return eigs[::-1]


def run_replications(config: RunConfig) -> McSamples:
    """Simulate the scenario and standardize each spike packet.

    Failed replications (singular/ill-conditioned eigensolves, or packets
    that cannot be disambiguated) are excluded; more than 1% aborts the run.
    """
    spec, pair, params = _scenario_params(config)
    p, n1, n2 = config.p, config.n1, config.n2
    m_total = spec.total_multiplicity
    pop_x = PopulationKind(config.population_x)
    pop_y = PopulationKind(config.population_y)
    psi_values = np.array([prm.psi for prm in params])
    reps = config.replications
    raw = [np.full((reps, mult), np.nan) for _, mult in spec.spikes]
    spectra = np.full((reps, p), np.nan) if config.dump_spectra else None
    failed = np.zeros(reps, dtype=bool)
    root = np.sqrt(p - m_total)
    sqrt1_diag = np.sqrt(np.diagonal(pair.sigma1)) if pair.sigma1_is_diagonal() else None
    jobs = max(1, config.jobs)
    workspaces = [_Workspace(p, n1, n2) for _ in range(jobs)]

    def one(r: int, ws: _Workspace) -> None:
        rng = stream_rng(config.base_seed, 0, r)
        fill_sample(pop_x, rng, ws.x, ws.tmp(p, n1))
        fill_sample(pop_y, rng, ws.y, ws.tmp(p, n2))
        try:
            eigs = _fisher_eigs_fast(ws, pair, sqrt1_diag, n1, n2)
            spectrum = FisherSpectrum(eigs=eigs, p=p, n1=n1, n2=n2)
            groups = largest_group(spectrum, spec, psi_values)
        except (SingularMatrixError, GroupingConflictError, linalg.LinAlgError):
            failed[r] = True
            return
        if spectra is not None:
            spectra[r] = eigs
        for k in range(spec.n_distinct):
            raw[k][r] = root * (eigs[groups[k]] / psi_values[k] - 1.0)

    def chunk(slot: int) -> None:
        for r in range(slot, reps, jobs):
            one(r, workspaces[slot])

    # single-threaded BLAS inside the loop keeps results bit-identical for
    # every jobs setting and avoids oversubscription in the pool
    with _blas_single_thread():
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                list(pool.map(chunk, range(jobs)))
        else:
            chunk(0)

    n_failed = int(failed.sum())
    if n_failed > 0.01 * reps:
        raise ConfigError(f"{n_failed}/{reps} replications failed; aborting")
    keep = ~failed
    return McSamples(
        config=config,
        params=params,
        gammas=[g[keep] for g in raw],
        n_effective=int(keep.sum()),
        n_failed=n_failed,
        spectra=spectra[keep] if spectra is not None else None,
    )


def ks_statistic(samples: np.ndarray, reference_cdf) -> float:
    """One-sample Kolmogorov-Smirnov sup distance against a cdf callable."""
    x = np.sort(np.asarray(samples, dtype=np.float64))
    n = len(x)
    if n == 0:
        raise SampleSizeError("need at least one sample")
    f = np.asarray(reference_cdf(x), dtype=np.float64)
    i = np.arange(1, n + 1)
    return float(np.max(np.maximum(i / n - f, f - (i - 1) / n)))


def empirical_cdf(reference_samples: np.ndarray):
    """Step cdf of a reference sample, usable with ks_statistic."""
    ref = np.sort(np.asarray(reference_samples, dtype=np.float64))

    def cdf(x):
        return np.searchsorted(ref, x, side="right") / len(ref)

    return cdf


@dataclass(frozen=True)
class McReportRow:
    statistic: str
    percentiles: tuple[float, ...]
    ks: float
    n_effective: int

    def __post_init__(self):
        if any(np.diff(self.percentiles) < 0):
            raise ConfigError("percentile row must be nondecreasing")


def percentile_table(
    samples: np.ndarray,
    reference_cdf,
    statistic: str = "stat",
    probs=PERCENTILE_PROBS,
    min_samples: int = 100,
) -> McReportRow:
    """Empirical quantiles (linear interpolation) plus the KS distance."""
    samples = np.asarray(samples, dtype=np.float64)
    if len(samples) < min_samples:
        raise SampleSizeError(f"need >= {min_samples} samples, got {len(samples)}")
    qs = tuple(float(q) for q in np.quantile(samples, probs))
    return McReportRow(
        statistic=statistic,
        percentiles=qs,
        ks=ks_statistic(samples, reference_cdf),
        n_effective=len(samples),
    )


_STAR_REFERENCE_CACHE: dict[tuple, np.ndarray] = {}


def star_reference_samples(
    block: BlockLaw, phi_k: float, m_k: int, n_draws: int = 1_000_000, seed: int = 1234
) -> np.ndarray:
    """Cached draws of the packet-average limit for multiplicity >= 2 spikes."""
    key = (round(block.var_diag, 12), round(block.var_offdiag, 12),
           round(phi_k, 12), m_k, n_draws, seed)
    if key not in _STAR_REFERENCE_CACHE:
        draws = multi_spike_law(m_k, block, phi_k, n_draws, seed)
        _STAR_REFERENCE_CACHE[key] = np.sort(draws.mean(axis=1))
    return _STAR_REFERENCE_CACHE[key]


def table1_report(samples: McSamples) -> list[McReportRow]:
    """One report row per spike: sigma-standardized vs N(0,1) for simple
    spikes, packet average vs the sampled limit law for multiple ones."""
    rows = []
    spec = samples.config.spike_spec()
    for k, (_, mult) in enumerate(spec.spikes):
        prm = samples.params[k]
        if mult == 1:
            rows.append(
                percentile_table(
                    samples.gamma_std(k), stats.norm.cdf, statistic=f"gamma{k + 1}"
                )
            )
        else:
            ref = star_reference_samples(prm.block, prm.phi, mult)
            rows.append(
                percentile_table(
                    samples.gamma_star(k),
                    empirical_cdf(ref),
                    statistic=f"gamma{k + 1}_star",
                )
            )
    return rows


def invariance_ab_test(config_a: RunConfig, config_b: RunConfig) -> float:
    """Two-sample KS p-value between standardized top-spike samples.

    The configs must share geometry and differ only in population laws.
    """
    if config_a.geometry_key() != config_b.geometry_key():
        raise ConfigError("invariance A/B test requires identical scenario geometry")
    res_a = run_replications(config_a)
    res_b = run_replications(config_b)
    return float(stats.ks_2samp(res_a.gamma_std(0), res_b.gamma_std(0)).pvalue)


# ---------------------------------------------------------------------------
# Roy test: empirical size and power
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RoyMcConfig:
    """Table-2 style geometry: ratios fix (q1, q0, n) given p."""

    p: int = 50
    c1_tilde: float = 2.0
    c2_tilde: float = 0.5
    q1_ratio: float = 0.2
    replications: int = 1000
    base_seed: int = 0
    level: float = 0.05
    jobs: int = 1

    def setup(self) -> RoySetup:
        q1 = int(round(self.p / self.c1_tilde))
        q0 = int(round(q1 / self.q1_ratio))
        n = q0 + int(round(self.p / self.c2_tilde))
        return RoySetup(p=self.p, n=n, q0=q0, q1=q1, level=self.level)


@dataclass(frozen=True)
class SizePowerResult:
    size: float
    power: float
    threshold: float
    beta1_mean: float
    analytic_power: float
    setup: RoySetup


def size_power_run(config: RoyMcConfig) -> SizePowerResult:
    """Empirical rejection rates under the null and the mean-shift alternative.

    The design Z (entries N(1, 0.5)) is drawn once per geometry: the null law
    of the largest root is design-free, and B-hat - B = E K and
    G = E (I - P_Z) E' depend on the design only through fixed projections.
    Under the alternative the first ceil(p/2) entries of column 1 of B1 are
    N(0.5, 1), redrawn each replication; errors are N(0, I_p).
    """
    setup = config.setup()
    p, n, q0, q1 = setup.p, setup.n, setup.q0, setup.q1
    rng = stream_rng(config.base_seed, 1)
    z = 1.0 + np.sqrt(0.5) * rng.standard_normal((q0, n))
    zzt = z @ z.T
    cho = linalg.cho_factor(zzt)
    k_mat = linalg.cho_solve(cho, z).T            # n x q0
    z1, z2 = z[:q1], z[q1:]
    if z2.shape[0]:
        cross = linalg.solve(z2 @ z2.T, z2 @ z1.T, assume_a="pos")
        a11_2 = z1 @ z1.T - (z1 @ z2.T) @ cross
    else:
        a11_2 = z1 @ z1.T
    a11_2 = (a11_2 + a11_2.T) / 2.0
    l_a = linalg.cholesky(a11_2, lower=True)
    thr = roy_threshold(setup)
    nhalf = (p + 1) // 2
    scale = (n - q0) / q1
    reps = config.replications
    rej0 = np.zeros(reps, dtype=bool)
    rej1 = np.zeros(reps, dtype=bool)
    beta1s = np.zeros(reps)

    def one(r: int) -> None:
        rr = stream_rng(config.base_seed, 0, r)
        e = rr.standard_normal((p, n))
        b_noise = (e @ k_mat)[:, :q1]
        resid = e - (e @ k_mat) @ z
        g = resid @ resid.T
        b1 = np.zeros((p, q1))
        b1[:nhalf, 0] = 0.5 + rr.standard_normal(nhalf)
        beta1s[r] = 1.0 + float(np.sum((b1[:, 0] ** 2)) * a11_2[0, 0]) / q1
        cho_g = linalg.cho_factor(g)
        for alt, sink in ((False, rej0), (True, rej1)):
            m = (b_noise + (b1 if alt else 0.0)) @ l_a
            lam = linalg.eigvalsh(m.T @ linalg.cho_solve(cho_g, m))[-1]
            sink[r] = scale * lam > thr

    with _blas_single_thread():
        if config.jobs > 1:
            with ThreadPoolExecutor(max_workers=config.jobs) as pool:
                list(pool.map(one, range(reps)))
        else:
            for r in range(reps):
                one(r)

    beta1_mean = float(beta1s.mean())
    try:
        analytic = spike_power(beta1_mean, setup)
    except Exception:
        analytic = float("nan")
    return SizePowerResult(
        size=float(rej0.mean()),
        power=float(rej1.mean()),
        threshold=float(thr),
        beta1_mean=beta1_mean,
        analytic_power=analytic,
        setup=setup,
    )


# ---------------------------------------------------------------------------
# Reproduction drivers and CSV output
# ---------------------------------------------------------------------------

TABLE1_PANELS = {"gaussian": "gaussian", "binary": "rademacher", "t4": "t4scaled"}
TABLE2_C1 = (5.0, 2.0, 0.5)
TABLE2_C2 = (0.8, 0.5, 0.2)
TABLE2_RATIOS = (0.2, 0.8)


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([v if isinstance(v, str) else _fmt(v) for v in row])


def write_histogram(path: Path, samples: np.ndarray, statistic: str) -> None:
    counts, edges = np.histogram(samples, bins="fd")
    width = np.diff(edges)
    dens = counts / (counts.sum() * width)
    rows = [[lo, hi, int(c), d] for lo, hi, c, d in zip(edges[:-1], edges[1:], counts, dens)]
    write_csv(path, ["bin_lo", "bin_hi", "count", "density"],
              [[r[0], r[1], str(r[2]), r[3]] for r in rows])


def reproduce_table1(
    panel: str,
    case: str,
    out_dir,
    replications: int = 1000,
    base_seed: int = 0,
    jobs: int = 1,
    dump_spectra: bool = False,
) -> list[McReportRow]:
    """Run one Table-1 panel and write percentiles/samples/histogram CSVs."""
    if panel not in TABLE1_PANELS:
        raise ConfigError(f"panel must be one of {sorted(TABLE1_PANELS)}")
    pop = TABLE1_PANELS[panel]
    config = RunConfig(
        case=case, population_x=pop, population_y=pop,
        replications=replications, base_seed=base_seed, jobs=jobs,
        dump_spectra=dump_spectra,
    )
    samples = run_replications(config)
    rows = table1_report(samples)
    out = Path(out_dir)
    prob_cols = [f"p{int(100 * q):02d}" for q in PERCENTILE_PROBS]
    write_csv(
        out / "percentiles.csv",
        ["statistic", "case", "method", *prob_cols, "ks"],
        [[r.statistic, case, "new", *r.percentiles, r.ks] for r in rows],
    )
    spec = config.spike_spec()
    header = ["rep"]
    cols: list[np.ndarray] = []
    for k, (_, mult) in enumerate(spec.spikes):
        for j in range(mult):
            header.append(f"gamma{k + 1}_{j + 1}")
            cols.append(samples.gammas[k][:, j])
        if mult == 1:
            header.append(f"gamma{k + 1}_std")
            cols.append(samples.gamma_std(k))
        else:
            header.append(f"gamma{k + 1}_star")
            cols.append(samples.gamma_star(k))
    body = [
        [str(r), *[_fmt(c[r]) for c in cols]] for r in range(samples.n_effective)
    ]
    write_csv(out / "samples.csv", header, body)
    for k, (_, mult) in enumerate(spec.spikes):
        name = rows[k].statistic
        data = samples.gamma_std(k) if mult == 1 else samples.gamma_star(k)
        write_histogram(out / f"histogram_{name}.csv", data, name)
    if dump_spectra and samples.spectra is not None:
        write_csv(
            out / "spectra.csv",
            [f"l{i + 1}" for i in range(config.p)],
            [[_fmt(v) for v in row] for row in samples.spectra],
        )
    return rows


def reproduce_table2(
    out_dir,
    rows: str = "all",
    p_values=(50, 100),
    replications: int = 1000,
    base_seed: int = 0,
    jobs: int = 1,
) -> list[SizePowerResult]:
    """Run the Table-2 grid (optionally filtered) and write sizepower.csv.

    ``rows`` filters by substring against "ratio=R,c1=A,c2=B,p=P" labels;
    "all" keeps everything.
    """
    results = []
    table_rows = []
    for ratio in TABLE2_RATIOS:
        for c1 in TABLE2_C1:
            for c2 in TABLE2_C2:
                for p in p_values:
                    label = f"ratio={ratio},c1={c1},c2={c2},p={p}"
                    if rows != "all" and rows not in label:
                        continue
                    cfg = RoyMcConfig(
                        p=p, c1_tilde=c1, c2_tilde=c2, q1_ratio=ratio,
                        replications=replications, base_seed=base_seed, jobs=jobs,
                    )
                    res = size_power_run(cfg)
                    results.append(res)
                    table_rows.append([c1, c2, p, ratio, res.size, res.power])
    write_csv(Path(out_dir) / "sizepower.csv",
              ["c1", "c2", "p", "q1_ratio", "size", "power"], table_rows)
    return results
