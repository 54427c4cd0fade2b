"""Phase transition of spiked Fisher sample eigenvalues.

Walks the map psi(alpha) for the canonical geometry (c1 = 0.2, c2 = 0.5,
all-ones bulk): the three reference spikes, the detectability boundary where
psi' changes sign, and what happens to absorbed spikes.
"""
import numpy as np

from spiked_fisher import (
    BulkMeasure,
    SpikeClass,
    classify_spike,
    fisher_lsd_support,
    psi,
    psi_prime,
)

C1, C2 = 0.2, 0.5
bulk = BulkMeasure.point_mass(1.0)

print("reference spikes (population -> sample limit):")
for alpha in (20.0, 0.2, 0.1):
    res = classify_spike(alpha, C1, C2, bulk)
    print(f"  alpha={alpha:5.2f}  psi={res.psi:9.4f}  psi'={res.psi_prime:8.4f}  "
          f"{res.classification.value}")

a, b = fisher_lsd_support(C1, C2)
print(f"\nbulk sample spectrum fills [{a:.4f}, {b:.4f}]")

print("\nscanning alpha above the bulk: the detectability boundary")
last = None
for alpha in np.arange(2.2, 6.01, 0.2):
    res = classify_spike(alpha, C1, C2, bulk)
    mark = ""
    if last is not None and last is not res.classification:
        mark = "   <-- transition"
    last = res.classification
    print(f"  alpha={alpha:4.1f}  limit={res.rho:8.4f}  {res.classification.value}{mark}")

print("\nabsorbed spikes park exactly at the bulk edge:")
up = classify_spike(3.0, C1, C2, bulk)
lo = classify_spike(0.7, C1, C2, bulk)
print(f"  alpha=3.0 -> rho={up.rho:.6f} (upper edge {b:.6f})")
print(f"  alpha=0.7 -> rho={lo.rho:.6f} (lower edge {a:.6f})")

print("\nwith c1 = c2 = 0 the map is the identity (classical fixed-p regime):")
for alpha in (0.5, 3.0, 20.0):
    print(f"  psi({alpha}) = {psi(alpha, 0.0, 0.0, bulk):.6f},"
          f"  psi'({alpha}) = {psi_prime(alpha, 0.0, 0.0, bulk):.6f}")
