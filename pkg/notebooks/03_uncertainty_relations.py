"""Coherence cannot be small in several incompatible bases at once."""

from geocoherence import (
    CIRCULAR,
    COMPUTATIONAL,
    HADAMARD,
    TILTED,
    geometric_coherence,
    incompatibility,
    incompatibility_vector,
    maximally_coherent_mixed,
    purity,
    three_basis_check,
    two_basis_check,
    two_basis_lower_bound,
)
from geocoherence.figures import FIGURE_BASES
from geocoherence.tradeoffs import (
    IncompatibilityVector,
    three_basis_case,
    three_basis_grid_oracle,
    three_basis_lower_bound,
    two_basis_grid_oracle,
)

# Incompatibility is the largest squared overlap between kets of two bases.
print("c(hadamard, ex2y) =", incompatibility(HADAMARD, TILTED).value)
print("c(circular, ex2y) =", incompatibility(CIRCULAR, TILTED).value)

# Two bases: the summed coherence is bounded below by purity and incompatibility.
for q in (0.2, 0.6, 1.0):
    rho = maximally_coherent_mixed(q)
    for x, y in ((HADAMARD, TILTED), (CIRCULAR, TILTED)):
        r = two_basis_check(rho, x, y)
        print(f"q={q:.1f} c={r.extras['incompatibility']:.2f}  sum={r.lhs:.6f}  bound={r.bound:.6f}")

# The bound comes from maximizing a convex function over a polygon; a fine grid agrees.
for p, c in ((0.75, 0.6), (1.0, 0.9)):
    print(f"P={p} c={c}: closed form {two_basis_lower_bound(p, c):.8f}  grid {two_basis_grid_oracle(p, c):.8f}")

# For pure states the bound is state independent.
print("pure states, mutually unbiased bases:", two_basis_lower_bound(1.0, 0.5))

# Three bases: the incompatibility vector picks one of two formulas.
bases = FIGURE_BASES["fig4"]
cv = incompatibility_vector(*bases)
print("incompatibility vector:", cv.as_tuple(), " case", three_basis_case(cv))
for q in (0.3, 0.7, 1.0):
    r = three_basis_check(maximally_coherent_mixed(q), *bases)
    print(f"q={q:.1f}  sum={r.lhs:.6f}  bound={r.bound:.6f}")

# The grid over the polyhedron never drops below the formula.
for v in ((0.9, 0.8, 0.5), (0.6, 0.55, 0.5), (0.95, 0.9, 0.85)):
    v = IncompatibilityVector(*v)
    print(v.as_tuple(), "bound", round(three_basis_lower_bound(0.9, v), 6), "grid", round(three_basis_grid_oracle(0.9, v), 6))

# Summed coherence over three mutually unbiased bases for a pure state.
rho = maximally_coherent_mixed(1.0)
print("sum over computational/hadamard/circular:",
      sum(geometric_coherence(rho, b).value for b in (COMPUTATIONAL, HADAMARD, CIRCULAR)),
      " purity", purity(rho))
print("slack against the three-basis bound:", round(three_basis_check(rho, COMPUTATIONAL, HADAMARD, CIRCULAR).slack, 6))
