"""Signal detection against noise-only recordings.

Tests A = 0 in y_t = A x_t + e_t using the largest eigenvalue of the
two-sample Fisher matrix (T/m)(ZZ')^{-1}(YY'), and compares the analytic
power curve with an empirical one over a grid of signal strengths.  Writes
the curve to demos/out/signal_power.csv.
"""
import csv
from pathlib import Path

import numpy as np

from spiked_fisher import (
    SignalSetup,
    roy_threshold,
    signal_fisher,
    signal_power,
    signal_simulate,
    stream_rng,
)

OUT = Path(__file__).parent / "out"
p, m, t = 50, 100, 200
base = SignalSetup(p=p, m=m, t=t)
roy = base.roy_analog()
thr = roy_threshold(roy)
print(f"p={p}, m={m}, T={t}: threshold = {thr:.4f} "
      f"(psi0={roy.psi0:.4f}, sigma_tw={roy.sigma_tw:.4f})")

grid = np.arange(1.0, 8.01, 0.5)
reps = 300
rows = []
for beta1 in grid:
    analytic = signal_power(float(beta1), base)
    if beta1 == 1.0:
        setup = base
    else:
        a = np.zeros((p, 1))
        a[0, 0] = np.sqrt(beta1 - 1.0)
        setup = SignalSetup(p=p, m=m, t=t, mixing=a)
    rej = 0
    for r in range(reps):
        y, z = signal_simulate(setup, stream_rng(int(10 * beta1), 0, r))
        rej += signal_fisher(y, z, m, t).eigs[0] > thr
    rows.append((float(beta1), analytic, rej / reps))
    print(f"  beta1={beta1:4.1f}  analytic={analytic:.3f}  empirical={rej / reps:.3f}")

OUT.mkdir(parents=True, exist_ok=True)
with open(OUT / "signal_power.csv", "w", newline="") as fh:
    writer = csv.writer(fh)
    writer.writerow(["beta1", "analytic_power", "empirical_power"])
    writer.writerows(rows)
print(f"\ncurve written to {OUT / 'signal_power.csv'}")
print("note: below the detectability transition (beta1 < ~2.4 here) the")
print("spike is absorbed and rejection stays near the test level.")
