"""Curve data for the maximally coherent mixed state family.

Each figure tabulates, on a uniform grid of the mixing parameter ``q``, the
summed coherence of ``(1-q)/2 I + q |psi+><psi+|`` over a fixed set of bases
together with the relevant bounds, all computed through the library:

``fig2a``
    hadamard + tilted bases (incompatibility 9/10): exact sum, two-basis
    lower bound, purity-ceiling upper bound.
``fig2b``
    circular + tilted bases (incompatibility 1/2): same columns.
``fig4``
    the tilted, hadamard and computational bases (incompatibility vector
    (9/10, 4/5, 1/2)): exact sum and three-basis lower bound.
"""

from __future__ import annotations

import csv
import io

import numpy as np

from .coherence import geometric_coherence
from .qubit import COMPUTATIONAL, CIRCULAR, HADAMARD, TILTED, OrthonormalBasis, ket, maximally_coherent_mixed, purity
from .tradeoffs import (
    incompatibility,
    incompatibility_vector,
    purity_ceiling,
    three_basis_lower_bound,
    two_basis_lower_bound,
)

FIGURES = ("fig2a", "fig2b", "fig4")

# Same kets as TILTED and HADAMARD, listed in the opposite order.
TILTED_SWAPPED = OrthonormalBasis((ket(-2, 1), ket(1, 2)))
HADAMARD_SWAPPED = OrthonormalBasis((ket(1, -1), ket(1, 1)))

FIGURE_BASES = {
    "fig2a": (HADAMARD, TILTED),
    "fig2b": (CIRCULAR, TILTED),
    "fig4": (TILTED_SWAPPED, HADAMARD_SWAPPED, COMPUTATIONAL),
}


def figure_columns(which: str) -> tuple[str, ...]:
    if which == "fig4":
        return ("q", "exact", "lower")
    if which in ("fig2a", "fig2b"):
        return ("q", "exact", "lower", "upper")
    raise ValueError(f"unknown figure {which!r}; choose from {FIGURES}")


def figure_row(which: str, q: float) -> tuple[float, ...]:
    bases = FIGURE_BASES[which]
    rho = maximally_coherent_mixed(q)
    p = purity(rho)
    exact = sum(geometric_coherence(rho, b).value for b in bases)
    if which == "fig4":
        return (q, exact, three_basis_lower_bound(p, incompatibility_vector(*bases)))
    lower = two_basis_lower_bound(p, incompatibility(*bases).value)
    # twice the single-basis ceiling bounds the two-basis sum
    upper = 2.0 * purity_ceiling(p)
    return (q, exact, lower, upper)


def figure_rows(which: str, steps: int) -> list[tuple[float, ...]]:
    """Rows for ``steps`` values of ``q`` spaced uniformly on [0, 1], endpoints included."""
    figure_columns(which)
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    return [figure_row(which, float(q)) for q in np.linspace(0.0, 1.0, steps)]


def format_number(x: float) -> str:
    """12 significant digits, '.' decimal separator."""
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def figure_csv(which: str, steps: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(figure_columns(which))
    for row in figure_rows(which, steps):
        writer.writerow([format_number(v) for v in row])
    return buf.getvalue()
