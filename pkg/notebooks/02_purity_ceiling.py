"""How much coherence a given purity allows."""

import numpy as np

from geocoherence import (
    COMPUTATIONAL,
    ceiling_check,
    complementarity_check,
    geometric_coherence,
    maximally_coherent_mixed,
    mixedness,
    purity,
    purity_ceiling,
)
from geocoherence.sampling import SampleStream
from geocoherence.verification import constructed_ceiling_states

# The ceiling depends on purity only: 1/2 - sqrt((1 - P) / 2).
for p in (0.5, 0.6, 0.8, 1.0):
    print(f"P={p:.1f}  ceiling={purity_ceiling(p):.6f}")

# It is reached exactly when both basis diagonals are 1/2.
rho = maximally_coherent_mixed(0.5)
print("C_g =", geometric_coherence(rho, COMPUTATIONAL).value, " ceiling =", purity_ceiling(purity(rho)))

# The older bounds q^2/2 and q sit well above C_g for this state.
print("q^2/2 =", 0.5**2 / 2, " q =", 0.5)

# The same statement reads as a trade-off with mixedness S_L = 2 (1 - P).
r = complementarity_check(rho, COMPUTATIONAL)
print("S_L =", mixedness(rho), " C_g + sqrt(S_L)/2 =", r.lhs, " (at most 1/2)")

# Random draws never cross the ceiling; the slack distribution shows how far off they are.
stream = SampleStream(seed=2)
slacks = np.array([ceiling_check(stream.state(), stream.basis()).slack for _ in range(2000)])
print("slack min / median:", slacks.min(), np.median(slacks))

# States built with equal diagonals sit on the ceiling; a small imbalance moves them off.
on = [ceiling_check(r, b).slack for r, b in constructed_ceiling_states(3, 100)]
off = [ceiling_check(r, b).slack for r, b in constructed_ceiling_states(3, 100, imbalance=0.05)]
print("equal diagonals, max |slack|:", max(map(abs, on)))
print("imbalance 0.05, min slack:", min(off))
