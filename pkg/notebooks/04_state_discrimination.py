"""Coherence as a discrimination error, and what purity says about the error."""

import math

from geocoherence import (
    PureEnsemble,
    QubitState,
    coherence_error_pair,
    ensemble_from_state,
    error_ceiling_check,
    helstrom_error,
    ket,
    min_error_probability,
    state_from_ensemble,
)
from geocoherence.cli import example4_ensemble
from geocoherence.qubit import COMPUTATIONAL, TILTED
from geocoherence.sampling import SampleStream

# Telling apart two pure states: the optimal measurement projects onto the top
# eigenvector of p1 rho1 - p2 rho2.
ens = PureEnsemble.of(0.4, ket(1, 0), ket(1, 1))
r = min_error_probability(ens)
print("P_e =", r.error_probability, " closed form =", helstrom_error(ens))
print("optimal projector Bloch vector:", r.optimal_projector_bloch)

# Any state splits into a two-element ensemble tied to a basis; its error equals C_g.
rho = QubitState.from_bloch([0.3, -0.4, 0.5])
split = ensemble_from_state(rho, TILTED)
print("weights:", split.weights)
print("ensemble averages back to rho:", abs(state_from_ensemble(split).matrix - rho.matrix).max())
print("(C_g, P_e) =", coherence_error_pair(rho, TILTED))

# So purity caps the error of every two-state pure ensemble.
for theta in (0.0, math.pi / 12, math.pi / 6, math.pi / 4):
    check = error_ceiling_check(example4_ensemble(theta))
    print(f"theta={theta:.3f}  P_e={check.lhs:.6f}  sin^2={math.sin(theta) ** 2:.6f}  ceiling={check.bound:.6f}")

# Random ensembles stay below the ceiling.
stream = SampleStream(seed=4)
print("min slack over 2000 random ensembles:",
      min(error_ceiling_check(stream.ensemble()).slack for _ in range(2000)))

# A state that is diagonal in the basis gives a degenerate split; both numbers are 0.
print(coherence_error_pair(QubitState.from_bloch([0, 0, 1]), COMPUTATIONAL))
