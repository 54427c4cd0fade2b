"""Command-line interface.

Subcommands: psi, clt-params, infer, roy-test, signal-test, power, simulate,
and reproduce (table1 / table2).  Errors exit nonzero with a JSON error
object on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .applications import (
    RoySetup,
    SignalSetup,
    fit_mvlm,
    roy_decide,
    roy_threshold,
    signal_fisher,
    spike_power,
)
from .errors import ConfigError, SpikedFisherError
from .harness import (
    RunConfig,
    reproduce_table1,
    reproduce_table2,
    run_replications,
    table1_report,
    write_csv,
    PERCENTILE_PROBS,
)
from .inference import estimate_alpha1
from .phase import BulkMeasure, classify_spike
from .spectra import FisherSpectrum


def _load_bulk(path: str | None) -> BulkMeasure:
    if path is None:
        return BulkMeasure.point_mass(1.0)
    values = np.loadtxt(path, delimiter=",").ravel()
    return BulkMeasure.from_values(values)


def _cmd_psi(args) -> dict:
    bulk = _load_bulk(args.bulk)
    res = classify_spike(args.alpha, args.c1, args.c2, bulk)
    return {
        "alpha": res.alpha,
        "psi": res.psi,
        "psi_prime": res.psi_prime,
        "classification": res.classification.value,
        "rho": res.rho,
    }


def _cmd_clt_params(args) -> dict:
    config = RunConfig.from_json(args.config)
    from .harness import _scenario_params

    _, _, params = _scenario_params(config)
    if not 1 <= args.spike <= len(params):
        raise ConfigError(f"spike index must be in 1..{len(params)}")
    prm = params[args.spike - 1]
    return {
        "psi_n": prm.psi,
        "theta": prm.theta,
        "phi": prm.phi,
        "nu1": prm.nu1,
        "nu2": prm.nu2,
        "sigma_sq": prm.sigma_sq,
        "block_var_diag": prm.block.var_diag,
        "block_var_offdiag": prm.block.var_offdiag,
    }


def _cmd_infer(args) -> dict:
    eigs = np.sort(np.loadtxt(args.spectrum, delimiter=",").ravel())[::-1]
    p = len(eigs)
    n1 = int(round(p / args.c1))
    n2 = int(round(p / args.c2))
    spectrum = FisherSpectrum(eigs=eigs, p=p, n1=n1, n2=n2)
    est = estimate_alpha1(spectrum, threshold=args.threshold,
                          sum_over_complement_at_psi=args.complement)
    return {
        "alpha_hat": est.alpha_hat,
        "psi_hat": est.psi_hat,
        "j1": est.j1.tolist(),
        "sigma_hat": est.sigma_hat,
        "theta_hat": est.theta_hat,
        "phi_hat": est.phi_hat,
        "nu1_hat": est.nu1_hat,
        "nu2_hat": est.nu2_hat,
        "lambda1_stat": est.lambda1_stat,
    }


def _cmd_roy_test(args) -> dict:
    w = np.atleast_2d(np.loadtxt(args.responses, delimiter=","))
    z = np.atleast_2d(np.loadtxt(args.design, delimiter=","))
    b1_null = None
    if args.b10 is not None:
        b1_null = np.atleast_2d(np.loadtxt(args.b10, delimiter=","))
    p, n = w.shape
    q0 = z.shape[0]
    setup = RoySetup(p=p, n=n, q0=q0, q1=args.q1, level=args.level)
    fit = fit_mvlm(w, z, args.q1, b1_null=b1_null)
    l1 = fit.largest_root(setup)
    thr = roy_threshold(setup)
    return {
        "l1": l1,
        "threshold": thr,
        "reject": roy_decide(l1, thr),
        "p_geometry": {
            "p": p, "n": n, "q0": q0, "q1": args.q1,
            "c1_tilde": setup.c1_tilde, "c2_tilde": setup.c2_tilde,
            "psi0": setup.psi0, "sigma_tw": setup.sigma_tw,
        },
    }


def _cmd_signal_test(args) -> dict:
    y = np.atleast_2d(np.loadtxt(args.y, delimiter=","))
    z = np.atleast_2d(np.loadtxt(args.z, delimiter=","))
    p, m = y.shape
    t = z.shape[1]
    setup = SignalSetup(p=p, m=m, t=t, level=args.level)
    spectrum = signal_fisher(y, z, m, t)
    roy = setup.roy_analog()
    thr = roy_threshold(roy)
    l1 = float(spectrum.eigs[0])
    return {
        "l1": l1,
        "threshold": thr,
        "reject": roy_decide(l1, thr),
        "p_geometry": {"p": p, "m": m, "T": t, "psi0": roy.psi0, "sigma_tw": roy.sigma_tw},
    }


def _parse_grid(text: str) -> np.ndarray:
    name, _, spec = text.partition("=")
    if name != "beta1" or not spec:
        raise ConfigError("grid must look like beta1=START:STEP:STOP")
    start, step, stop = (float(v) for v in spec.split(":"))
    return np.arange(start, stop + 1e-12, step)


def _cmd_power(args) -> int:
    grid = _parse_grid(args.grid)
    if args.mode == "roy":
        config = json.loads(Path(args.config).read_text())
        setup = RoySetup(**{k: config[k] for k in ("p", "n", "q0", "q1") },
                         level=config.get("level", 0.05))
    else:
        config = json.loads(Path(args.config).read_text())
        setup = SignalSetup(p=config["p"], m=config["m"], t=config["T"],
                            level=config.get("level", 0.05)).roy_analog()
    from .tracy_widom import tw1_cdf

    writer = sys.stdout
    writer.write("beta1,psi_n1,power\n")
    bulk = BulkMeasure.point_mass(1.0)
    for beta1 in grid:
        if bulk.contains(beta1):
            # no spike: the largest root stays at the null edge
            rho = setup.psi0
            power = 1.0 - tw1_cdf(setup.tw_quantile)
        else:
            rho = classify_spike(beta1, setup.c1_tilde, setup.c2_tilde, bulk).rho
            power = spike_power(beta1, setup)
        writer.write(f"{beta1:.10g},{rho:.10g},{power:.10g}\n")
    return 0


def _cmd_simulate(args) -> dict:
    config = RunConfig.from_json(args.config)
    samples = run_replications(config)
    rows = table1_report(samples)
    out = {
        "n_effective": samples.n_effective,
        "n_failed": samples.n_failed,
        "report": [
            {"statistic": r.statistic, "ks": r.ks,
             "percentiles": dict(zip([f"p{int(100 * q):02d}" for q in PERCENTILE_PROBS],
                                     r.percentiles))}
            for r in rows
        ],
    }
    if args.out is not None:
        out_dir = Path(args.out)
        prob_cols = [f"p{int(100 * q):02d}" for q in PERCENTILE_PROBS]
        write_csv(out_dir / "percentiles.csv",
                  ["statistic", "case", "method", *prob_cols, "ks"],
                  [[r.statistic, config.case, "new", *r.percentiles, r.ks] for r in rows])
    return out


def _cmd_reproduce(args) -> dict:
    if args.table == "table1":
        rows = reproduce_table1(
            panel=args.panel, case=args.case, out_dir=args.out,
            replications=args.replications, base_seed=args.seed, jobs=args.jobs,
        )
        return {r.statistic: {"ks": r.ks} for r in rows}
    results = reproduce_table2(
        out_dir=args.out, rows=args.rows, replications=args.replications,
        base_seed=args.seed, jobs=args.jobs,
    )
    return {"rows": len(results)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spiked-fisher",
        description="Spiked-eigenvalue inference for large-dimensional Fisher matrices",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_psi = sub.add_parser("psi", help="phase-transition map at one spike")
    p_psi.add_argument("--alpha", type=float, required=True)
    p_psi.add_argument("--c1", type=float, required=True)
    p_psi.add_argument("--c2", type=float, required=True)
    p_psi.add_argument("--bulk", default=None, help="CSV of bulk eigenvalues")

    p_clt = sub.add_parser("clt-params", help="CLT parameters for one spike of a scenario")
    p_clt.add_argument("--config", required=True)
    p_clt.add_argument("--spike", type=int, required=True, help="1-based distinct-spike index")

    p_inf = sub.add_parser("infer", help="estimate the largest population spike")
    p_inf.add_argument("--spectrum", required=True, help="CSV of sample eigenvalues")
    p_inf.add_argument("--c1", type=float, required=True)
    p_inf.add_argument("--c2", type=float, required=True)
    p_inf.add_argument("--threshold", type=float, default=0.2)
    p_inf.add_argument("--complement", action="store_true",
                       help="sum moment estimates at psi-hat over the bulk complement")

    p_roy = sub.add_parser("roy-test", help="Roy maximum-root test from data files")
    p_roy.add_argument("--responses", required=True, help="CSV, p x n")
    p_roy.add_argument("--design", required=True, help="CSV, q0 x n")
    p_roy.add_argument("--q1", type=int, required=True)
    p_roy.add_argument("--b10", default=None, help="CSV, p x q1 null coefficient block")
    p_roy.add_argument("--level", type=float, default=0.05)

    p_sig = sub.add_parser("signal-test", help="signal detection from data files")
    p_sig.add_argument("--y", required=True, help="CSV, p x m observations")
    p_sig.add_argument("--z", required=True, help="CSV, p x T noise-only")
    p_sig.add_argument("--level", type=float, default=0.05)

    p_pow = sub.add_parser("power", help="analytic power curve over a beta1 grid")
    p_pow.add_argument("--mode", choices=("roy", "signal"), required=True)
    p_pow.add_argument("--config", required=True)
    p_pow.add_argument("--grid", required=True, help="beta1=START:STEP:STOP")

    p_sim = sub.add_parser("simulate", help="run a scenario from a JSON config")
    p_sim.add_argument("--config", required=True)
    p_sim.add_argument("--out", default=None, help="directory for percentiles.csv")

    p_rep = sub.add_parser("reproduce", help="reproduce a table at desk scale")
    rep_sub = p_rep.add_subparsers(dest="table", required=True)
    r1 = rep_sub.add_parser("table1")
    r1.add_argument("--panel", choices=("gaussian", "binary", "t4"), required=True)
    r1.add_argument("--case", choices=("I", "II"), required=True)
    r1.add_argument("--out", required=True)
    r1.add_argument("--replications", type=int, default=1000)
    r1.add_argument("--seed", type=int, default=0)
    r1.add_argument("--jobs", type=int, default=1)
    r2 = rep_sub.add_parser("table2")
    r2.add_argument("--rows", default="all")
    r2.add_argument("--out", required=True)
    r2.add_argument("--replications", type=int, default=1000)
    r2.add_argument("--seed", type=int, default=0)
    r2.add_argument("--jobs", type=int, default=1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "psi": _cmd_psi,
        "clt-params": _cmd_clt_params,
        "infer": _cmd_infer,
        "roy-test": _cmd_roy_test,
        "signal-test": _cmd_signal_test,
        "simulate": _cmd_simulate,
        "reproduce": _cmd_reproduce,
    }
    try:
        if args.command == "power":
            return _cmd_power(args)
        result = handlers[args.command](args)
    except SpikedFisherError as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
