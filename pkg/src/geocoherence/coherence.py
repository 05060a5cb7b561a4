"""Geometric coherence of a qubit state with respect to a reference basis.

The geometric coherence is one minus the largest fidelity between ``rho`` and
a state that is diagonal in the reference basis. For qubits it has the closed
form implemented by :func:`geometric_coherence`; :func:`geometric_coherence_oracle`
maximizes the fidelity directly and is kept strictly separate from the closed
form so that each can certify the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qubit import (
    NumericalDomainError,
    OrthonormalBasis,
    PureKet,
    QubitState,
    clamp,
    matrix_sqrt_psd,
    overlap2,
)

# Radicand values in [-RADICAND_SLACK, 0) are round-off and clamp to zero.
RADICAND_SLACK = 1e-12

ORACLE_GRID_POINTS = 4001
ORACLE_BRACKET_WIDTH = 1e-12

_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class CoherenceResult:
    value: float
    basis_diagonals: tuple[float, float]

    def __float__(self):
        return self.value


def fidelity(rho: QubitState, sigma: QubitState) -> float:
    """Squared Uhlmann fidelity ``(tr sqrt(sqrt(rho) sigma sqrt(rho)))^2``, clamped to [0, 1]."""
    s = matrix_sqrt_psd(rho.matrix)
    inner = s @ sigma.matrix @ s
    inner = 0.5 * (inner + inner.conj().T)
    root = matrix_sqrt_psd(inner)
    return clamp(float(np.trace(root).real) ** 2, 0.0, 1.0, "fidelity")


def geometric_coherence(rho: QubitState, basis: OrthonormalBasis) -> CoherenceResult:
    """Closed-form geometric coherence of a qubit state.

    Evaluates ``1/2 - 1/2 sqrt(1 - 2 (tr rho^2 - sum_i <x_i|rho|x_i>^2))``
    with the radicand rewritten as ``(d1 - d2)^2 + 4 det(rho)``, where
    ``d_i = <x_i|rho|x_i>``. The two are equal for unit-trace ``rho``; the
    second is a sum of nonnegative terms and keeps full relative accuracy
    when the radicand is close to zero (coherence close to 1/2).

    Raises:
        NumericalDomainError: if the radicand is negative beyond round-off.
    """
    d1, d2 = rho.diagonals(basis)
    radicand = (d1 - d2) ** 2 + 4.0 * _det(rho.matrix)
    if radicand < -RADICAND_SLACK:
        raise NumericalDomainError(f"coherence radicand {radicand:.3e} is negative")
    radicand = clamp(radicand, 0.0, 1.0, "geometric_coherence.radicand")
    value = clamp(0.5 - 0.5 * math.sqrt(radicand), 0.0, 0.5, "geometric_coherence.value")
    return CoherenceResult(value, (d1, d2))


def _det(m: np.ndarray) -> float:
    return float(m[0, 0].real * m[1, 1].real - abs(m[0, 1]) ** 2)


def coherence_radicand_textbook(rho: QubitState, basis: OrthonormalBasis) -> float:
    """``1 - 2 (tr rho^2 - sum_i <x_i|rho|x_i>^2)`` evaluated literally."""
    d1, d2 = rho.diagonals(basis)
    p = float(np.sum(np.abs(rho.matrix) ** 2))
    return 1.0 - 2.0 * (p - (d1 * d1 + d2 * d2))


def pure_state_coherence(psi: PureKet, basis: OrthonormalBasis) -> float:
    """``1 - max_i |<x_i|psi>|^2``."""
    return 1.0 - max(overlap2(k, psi) for k in basis.kets)


class _IncoherentFidelity:
    """``t -> F(rho, t|x1><x1| + (1-t)|x2><x2|)`` straight from the fidelity definition.

    With ``A = sqrt(rho) P1 sqrt(rho)`` and ``B = sqrt(rho) P2 sqrt(rho)`` the
    inner operator is ``M(t) = t A + (1-t) B``; its trace norm of the square
    root is the sum of square roots of the eigenvalues of ``M(t)``.
    """

    def __init__(self, rho: QubitState, basis: OrthonormalBasis):
        s = matrix_sqrt_psd(rho.matrix)
        p1, p2 = basis.projectors()
        self.a = s @ p1 @ s
        self.b = s @ p2 @ s

    def __call__(self, t):
        t = np.asarray(t, dtype=float)[..., None, None]
        m = t * self.a + (1 - t) * self.b
        diag0 = m[..., 0, 0].real
        diag1 = m[..., 1, 1].real
        off = 0.5 * (m[..., 0, 1] + m[..., 1, 0].conj())
        mean = 0.5 * (diag0 + diag1)
        half = np.hypot(0.5 * (diag0 - diag1), np.abs(off))
        lam_hi = np.maximum(mean + half, 0.0)
        lam_lo = np.maximum(mean - half, 0.0)
        return (np.sqrt(lam_hi) + np.sqrt(lam_lo)) ** 2


def _golden_max(fn, lo: float, hi: float, width: float) -> tuple[float, float]:
    """Golden-section search for the maximum of ``fn`` on ``[lo, hi]``."""
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = fn(c), fn(d)
    while hi - lo > width:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = fn(d)
    best_t, best_f = (c, fc) if fc >= fd else (d, fd)
    for t in (lo, hi):
        ft = fn(t)
        if ft > best_f:
            best_t, best_f = t, ft
    return best_t, best_f


def geometric_coherence_oracle(rho: QubitState, basis: OrthonormalBasis) -> float:
    """Geometric coherence by brute-force maximization over incoherent states.

    Scans ``sigma(t) = t|x1><x1| + (1-t)|x2><x2|`` on a uniform grid of
    ``ORACLE_GRID_POINTS`` values of ``t``, then refines the best grid cell by
    golden-section search down to ``ORACLE_BRACKET_WIDTH``. Returns
    ``1 - max_t F(rho, sigma(t))``. Does not use the closed form.
    """
    fid = _IncoherentFidelity(rho, basis)
    grid = np.linspace(0.0, 1.0, ORACLE_GRID_POINTS)
    values = fid(grid)
    k = int(np.argmax(values))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, ORACLE_GRID_POINTS - 1)]
    _, f_best = _golden_max(lambda t: float(fid(t)), float(lo), float(hi), ORACLE_BRACKET_WIDTH)
    f_best = clamp(max(f_best, float(values[k])), 0.0, 1.0, "geometric_coherence_oracle")
    return 1.0 - f_best
