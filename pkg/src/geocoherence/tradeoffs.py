"""Trade-off relations for the geometric coherence of a qubit.

Three families of results live here:

* a purity ceiling on the coherence in any single basis, with its
  saturation test and the equivalent coherence/mixedness complementarity;
* lower bounds on the summed coherence over two or three bases in terms of
  purity and basis incompatibility (uncertainty relations);
* grid oracles that re-do, by brute force, the polytope maximizations the
  lower bounds rest on.

Every bound is written in terms of the convex helper
``f(x) = sqrt(1 + 4 (2P - 1)(x^2 - x))`` (:func:`f_convex`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

import numpy as np

from .coherence import geometric_coherence
from .qubit import (
    DomainError,
    OrthonormalBasis,
    QubitState,
    clamp,
    overlap2,
    purity,
)

SLACK_TOL = 1e-9
SAT_TOL = 1e-7

# Arguments may stray this far outside their range before DomainError.
RANGE_TOL = 1e-9
# Incompatibilities within this distance below 1/2 are round-off.
INCOMPATIBILITY_FLOOR_TOL = 1e-12
# Half-width of the band around the three-basis case boundary where both
# branches are evaluated and the smaller bound is returned.
CASE_BOUNDARY_TOL = 1e-12

TWO_BASIS_GRID = 2001
THREE_BASIS_GRID = 201
# Zoom passes after the coarse grid: points per axis and number of passes.
ZOOM_POINTS = 41
ZOOM_PASSES = 4


@dataclass(frozen=True)
class BoundReport:
    """Comparison of a computed quantity against a bound.

    ``slack`` is oriented so that a valid relation always has ``slack >= 0``:
    ``lhs - bound`` for lower bounds and ``bound - lhs`` for ceilings.
    """

    lhs: float
    bound: float
    slack: float
    saturated: bool
    upper: bool = False
    extras: Mapping[str, float] = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.slack < -SLACK_TOL


@dataclass(frozen=True)
class Incompatibility:
    value: float
    argmax_pair: tuple[int, int]


@dataclass(frozen=True)
class IncompatibilityVector:
    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for c in (self.c1, self.c2, self.c3):
            if not 0.5 - RANGE_TOL <= c <= 1 + RANGE_TOL:
                raise DomainError(f"incompatibility {c!r} outside [1/2, 1]")
        if not self.c1 >= self.c2 >= self.c3:
            raise DomainError(f"incompatibility vector {self.as_tuple()} is not descending")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


def _check_purity(p: float) -> float:
    if not 0.5 - RANGE_TOL <= p <= 1 + RANGE_TOL:
        raise DomainError(f"purity {p!r} outside [1/2, 1]")
    return min(max(p, 0.5), 1.0)


def _check_incompatibility(c: float) -> float:
    if not 0.5 - RANGE_TOL <= c <= 1 + RANGE_TOL:
        raise DomainError(f"incompatibility {c!r} outside [1/2, 1]")
    return min(max(c, 0.5), 1.0)


def f_convex(x, purity: float):
    """``sqrt(1 + 4 (2P - 1)(x^2 - x))``; convex and symmetric about ``x = 1/2``.

    Accepts scalars or arrays for ``x``.
    """
    radicand = 1.0 + 4.0 * (2.0 * purity - 1.0) * (x * x - x)
    if np.ndim(radicand):
        return np.sqrt(np.maximum(radicand, 0.0))
    return math.sqrt(max(radicand, 0.0))


# -- purity ceiling -------------------------------------------------------


def purity_ceiling(purity_value: float) -> float:
    """Largest geometric coherence any qubit state of this purity can have.

    ``1/2 - sqrt((1 - P) / 2)``; zero for the maximally mixed state, 1/2 for
    pure states.

    Raises:
        DomainError: if the purity is outside ``[1/2, 1]``.
    """
    p = _check_purity(purity_value)
    return 0.5 - math.sqrt(1.0 - p) / math.sqrt(2.0)


def ceiling_saturated(rho: QubitState, basis: OrthonormalBasis) -> bool:
    """True iff both basis diagonals of ``rho`` equal 1/2 within ``SAT_TOL``."""
    d1, _ = rho.diagonals(basis)
    return abs(d1 - 0.5) <= SAT_TOL


def ceiling_check(rho: QubitState, basis: OrthonormalBasis) -> BoundReport:
    c = geometric_coherence(rho, basis).value
    ceiling = purity_ceiling(purity(rho))
    return BoundReport(c, ceiling, ceiling - c, ceiling_saturated(rho, basis), upper=True)


def mixedness(rho: QubitState) -> float:
    """Normalized linear entropy ``2 (1 - P)`` of a qubit."""
    return clamp(2.0 * (1.0 - purity(rho)), 0.0, 1.0, "mixedness")


def complementarity_check(rho: QubitState, basis: OrthonormalBasis) -> BoundReport:
    """``C_g + sqrt(S_L) / 2`` against its ceiling of 1/2."""
    lhs = geometric_coherence(rho, basis).value + 0.5 * math.sqrt(mixedness(rho))
    return BoundReport(lhs, 0.5, 0.5 - lhs, ceiling_saturated(rho, basis), upper=True)


# -- overlap feasibility --------------------------------------------------


def overlap_triple_feasible(a: float, b: float, c: float, dim2: bool = True) -> bool:
    """Necessary conditions on the squared overlaps of three unit vectors.

    For unit vectors x, z, r with ``a = |<x|r>|^2``, ``b = |<z|r>|^2`` and
    ``c = |<z|x>|^2``: ``a + b <= 1 + sqrt(c)`` and ``|a - b| <= sqrt(1 - c)``,
    plus ``a + b >= 1 - sqrt(c)`` in dimension two.
    """
    sc = math.sqrt(c)
    ok = a + b <= 1 + sc + SLACK_TOL and abs(a - b) <= math.sqrt(max(1 - c, 0.0)) + SLACK_TOL
    if dim2:
        ok = ok and a + b >= 1 - sc - SLACK_TOL
    return ok


# -- incompatibility ------------------------------------------------------


def incompatibility(x: OrthonormalBasis, y: OrthonormalBasis) -> Incompatibility:
    """Largest squared overlap between a ket of ``x`` and a ket of ``y``."""
    best, pair = -1.0, (0, 0)
    for i, xi in enumerate(x.kets):
        for j, yj in enumerate(y.kets):
            o = overlap2(xi, yj)
            if o > best:
                best, pair = o, (i, j)
    if 0.5 - INCOMPATIBILITY_FLOOR_TOL <= best < 0.5:
        best = clamp(best, 0.5, 1.0, "incompatibility")
    return Incompatibility(best, pair)


def incompatibility_vector(
    x: OrthonormalBasis, y: OrthonormalBasis, z: OrthonormalBasis
) -> IncompatibilityVector:
    """Pairwise incompatibilities of three bases, sorted descending."""
    values = sorted(
        (incompatibility(u, v).value for u, v in ((x, y), (y, z), (x, z))), reverse=True
    )
    return IncompatibilityVector(*values)


# -- two-basis relation ---------------------------------------------------


def two_basis_lower_bound(purity_value: float, c: float) -> float:
    """Lower bound on ``C_g^X + C_g^Y``: ``(1 - sqrt(1 + 4 (2P-1)(c - sqrt c))) / 2``.

    At ``P = 1`` this is the state-independent bound for pure states.
    """
    p = _check_purity(purity_value)
    c = _check_incompatibility(c)
    if p == 0.5 or c == 1.0:
        return 0.0
    return 0.5 * (1.0 - math.sqrt(1.0 + 4.0 * (2.0 * p - 1.0) * (c - math.sqrt(c))))


def two_basis_check(rho: QubitState, x: OrthonormalBasis, y: OrthonormalBasis) -> BoundReport:
    lhs = geometric_coherence(rho, x).value + geometric_coherence(rho, y).value
    p = purity(rho)
    c = incompatibility(x, y).value
    bound = two_basis_lower_bound(p, c)
    slack = lhs - bound
    return BoundReport(lhs, bound, slack, slack <= SAT_TOL, extras={"purity": p, "incompatibility": c})


def _zoom_box(center, step, lo=0.0, hi=0.5):
    return [(max(lo, v - 2 * step), min(hi, v + 2 * step)) for v in center]


def two_basis_grid_oracle(purity_value: float, c: float) -> float:
    """Brute-force the maximization behind :func:`two_basis_lower_bound`.

    Maximizes ``g(a, b) = f(a) + f(b)`` over the polygon
    ``a + b >= 1 - sqrt(c)``, ``|b - a| <= sqrt(1 - c)``, ``a, b in [0, 1/2]``
    (the upper limit ``a + b <= 1 + sqrt(c)`` is implied there) on a
    ``TWO_BASIS_GRID`` square grid, followed by ``ZOOM_PASSES`` finer grids
    around the incumbent. Returns ``1 - max(g) / 2``.
    """
    p = _check_purity(purity_value)
    c = _check_incompatibility(c)
    sc, sd = math.sqrt(c), math.sqrt(1.0 - c)

    def search(box, n):
        a = np.linspace(*box[0], n)[:, None]
        b = np.linspace(*box[1], n)[None, :]
        ok = (a + b >= 1 - sc - 1e-15) & (a + b <= 1 + sc) & (np.abs(b - a) <= sd + 1e-15)
        g = np.where(ok, f_convex(a, p) + f_convex(b, p), -np.inf)
        k = np.unravel_index(np.argmax(g), g.shape)
        return float(g[k]), (float(a[k[0], 0]), float(b[0, k[1]]))

    best, arg = search([(0.0, 0.5), (0.0, 0.5)], TWO_BASIS_GRID)
    step = 0.5 / (TWO_BASIS_GRID - 1)
    for _ in range(ZOOM_PASSES):
        box = _zoom_box(arg, step)
        val, where = search(box, ZOOM_POINTS)
        if val > best:
            best, arg = val, where
        step = 4 * step / (ZOOM_POINTS - 1)
    return 1.0 - 0.5 * best


# -- three-basis relation -------------------------------------------------


def _three_basis_case1(p: float, s1: float, s3: float) -> float:
    return 1.0 - 0.5 * (f_convex(s1, p) + f_convex(s1 - s3, p))


def _three_basis_case2(p: float, s1: float, s2: float, s3: float) -> float:
    edge = 1.0 + f_convex(s1, p) + f_convex(s2, p)
    vertex = (
        f_convex((1 - s1 - s2 + s3) / 2, p)
        + f_convex((1 - s1 + s2 - s3) / 2, p)
        + f_convex((1 + s1 - s2 - s3) / 2, p)
    )
    return 1.5 - 0.5 * max(edge, vertex)


def three_basis_case(cv: IncompatibilityVector) -> int:
    """1 if ``1 + sqrt(c3) < sqrt(c1) + sqrt(c2)``, else 2."""
    s1, s2, s3 = (math.sqrt(c) for c in cv.as_tuple())
    return 1 if 1.0 + s3 < s1 + s2 else 2


def three_basis_lower_bound(purity_value: float, cv: IncompatibilityVector) -> float:
    """Lower bound on ``C_g^X + C_g^Y + C_g^Z`` from purity and the incompatibility vector.

    Case 1 (``1 + sqrt(c3) < sqrt(c1) + sqrt(c2)``):
    ``1 - [f(sqrt c1) + f(sqrt c1 - sqrt c3)] / 2``.
    Case 2 (otherwise): ``3/2 - max(1 + f(sqrt c1) + f(sqrt c2), f(u) + f(v) + f(w)) / 2``
    with ``u, v, w = (1 -+ sqrt c1 -+ sqrt c2 +- sqrt c3) / 2`` as in the vertex
    where all three cutting planes meet.

    Within ``CASE_BOUNDARY_TOL`` of the case boundary both branches are
    evaluated and the smaller value is returned.
    """
    p = _check_purity(purity_value)
    if not isinstance(cv, IncompatibilityVector):
        cv = IncompatibilityVector(*cv)
    s1, s2, s3 = (math.sqrt(min(max(c, 0.5), 1.0)) for c in cv.as_tuple())
    gap = (s1 + s2) - (1.0 + s3)
    if abs(gap) <= CASE_BOUNDARY_TOL:
        return min(_three_basis_case1(p, s1, s3), _three_basis_case2(p, s1, s2, s3))
    if gap > 0:
        return _three_basis_case1(p, s1, s3)
    return _three_basis_case2(p, s1, s2, s3)


def three_basis_check(
    rho: QubitState, x: OrthonormalBasis, y: OrthonormalBasis, z: OrthonormalBasis
) -> BoundReport:
    lhs = sum(geometric_coherence(rho, b).value for b in (x, y, z))
    p = purity(rho)
    cv = incompatibility_vector(x, y, z)
    bound = three_basis_lower_bound(p, cv)
    slack = lhs - bound
    extras = {"purity": p, "c1": cv.c1, "c2": cv.c2, "c3": cv.c3, "case": three_basis_case(cv)}
    return BoundReport(lhs, bound, slack, slack <= SAT_TOL, extras=extras)


def three_basis_grid_oracle(purity_value: float, cv: IncompatibilityVector) -> float:
    """Brute-force the polyhedron maximization behind :func:`three_basis_lower_bound`.

    Maximizes ``G(a, b, n) = f(a) + f(b) + f(n)`` over ``a, b, n in [0, 1/2]``
    subject to

    * ``a + b`` in ``[1 - sqrt c1, 1 + sqrt c1]``
    * ``a + n`` in ``[1 - sqrt c2, 1 + sqrt c2]``
    * ``b + n`` in ``[1 - sqrt c3, 1 + sqrt c3]``
    * ``|b - a| <= sqrt(1 - c1)``
    * ``|n - a| <= sqrt(1 - c2)``

    using a ``THREE_BASIS_GRID``-per-axis cube followed by zoomed grids around
    the incumbent. Returns ``3/2 - max(G) / 2``.
    """
    p = _check_purity(purity_value)
    if not isinstance(cv, IncompatibilityVector):
        cv = IncompatibilityVector(*cv)
    c1, c2, c3 = cv.as_tuple()
    s1, s2, s3 = math.sqrt(c1), math.sqrt(c2), math.sqrt(c3)
    d1, d2 = math.sqrt(1 - c1), math.sqrt(1 - c2)
    eps = 1e-15

    def search(box, n):
        av = np.linspace(*box[0], n)
        bv = np.linspace(*box[1], n)[:, None]
        nv = np.linspace(*box[2], n)[None, :]
        fb, fn = f_convex(bv, p), f_convex(nv, p)
        bn = bv + nv
        ok_bn = (bn >= 1 - s3 - eps) & (bn <= 1 + s3 + eps)
        best, arg = -math.inf, None
        for a in av:
            ok = (
                ok_bn
                & (a + bv >= 1 - s1 - eps) & (a + bv <= 1 + s1 + eps)
                & (a + nv >= 1 - s2 - eps) & (a + nv <= 1 + s2 + eps)
                & (np.abs(bv - a) <= d1 + eps)
                & (np.abs(nv - a) <= d2 + eps)
            )
            if not ok.any():
                continue
            g = np.where(ok, fb + fn, -np.inf)
            k = np.unravel_index(np.argmax(g), g.shape)
            val = f_convex(a, p) + float(g[k])
            if val > best:
                best, arg = val, (float(a), float(bv[k[0], 0]), float(nv[0, k[1]]))
        return best, arg

    best, arg = search([(0.0, 0.5)] * 3, THREE_BASIS_GRID)
    step = 0.5 / (THREE_BASIS_GRID - 1)
    for _ in range(ZOOM_PASSES):
        val, where = search(_zoom_box(arg, step), ZOOM_POINTS)
        if val > best:
            best, arg = val, where
        step = 4 * step / (ZOOM_POINTS - 1)
    return 1.5 - 0.5 * best


def descending_triples(values) -> list[IncompatibilityVector]:
    """All descending incompatibility vectors with components drawn from ``values``."""
    vals = sorted(set(values), reverse=True)
    out = []
    for i, j, k in combinations(range(len(vals) + 2), 3):
        # stars and bars: multisets of size 3
        idx = (i, j - 1, k - 2)
        out.append(IncompatibilityVector(*(vals[t] for t in idx)))
    return out
