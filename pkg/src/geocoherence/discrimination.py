"""Minimum-error discrimination of two pure qubit states.

The geometric coherence of ``rho`` in basis ``X`` equals the minimum error
probability of telling apart the ensemble ``{eta_i, |psi_i>}`` with
``eta_i = <x_i|rho|x_i>`` and ``|psi_i> = eta_i^{-1/2} sqrt(rho) |x_i>``.
Combined with the purity ceiling this caps the error probability of any
two-state pure ensemble by the purity of the state it averages to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coherence import geometric_coherence
from .qubit import (
    NORM_TOL,
    PAULI,
    OrthonormalBasis,
    PureKet,
    QubitError,
    QubitState,
    clamp,
    eig_hermitian_2x2,
    matrix_sqrt_psd,
    overlap2,
    purity,
)
from .tradeoffs import BoundReport, SAT_TOL, ceiling_saturated, purity_ceiling

WEIGHT_TOL = 1e-10


class InvalidEnsemble(QubitError):
    pass


class DegenerateWeight(QubitError):
    """A basis diagonal of the state is below ``WEIGHT_TOL``; the state is incoherent."""


@dataclass(frozen=True, eq=False)
class PureEnsemble:
    """Two weighted pure kets."""

    elements: tuple[tuple[float, PureKet], ...]

    def __post_init__(self):
        elements = tuple((float(w), k if isinstance(k, PureKet) else PureKet(k)) for w, k in self.elements)
        if len(elements) != 2:
            raise InvalidEnsemble(f"ensemble must have exactly two elements, got {len(elements)}")
        weights = [w for w, _ in elements]
        if any(not math.isfinite(w) or w < 0 for w in weights):
            raise InvalidEnsemble(f"weights must be finite and nonnegative, got {weights}")
        if abs(sum(weights) - 1.0) > NORM_TOL:
            raise InvalidEnsemble(f"weights sum to {sum(weights)!r}, expected 1")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of(cls, p1: float, psi1, psi2) -> PureEnsemble:
        return cls(((p1, psi1), (1.0 - p1, psi2)))

    @property
    def weights(self) -> tuple[float, float]:
        return tuple(w for w, _ in self.elements)

    @property
    def kets(self) -> tuple[PureKet, PureKet]:
        return tuple(k for _, k in self.elements)


@dataclass(frozen=True)
class DiscriminationResult:
    error_probability: float
    optimal_projector_bloch: np.ndarray

    def success_with_projector(self, ensemble: PureEnsemble) -> float:
        """Success probability of ``{Pi, I - Pi}`` recomputed from the reported projector."""
        pi = 0.5 * (np.eye(2) + np.tensordot(self.optimal_projector_bloch, PAULI, axes=1))
        (p1, k1), (p2, k2) = ensemble.elements
        hit1 = np.trace(pi @ k1.projector()).real
        hit2 = np.trace((np.eye(2) - pi) @ k2.projector()).real
        return float(p1 * hit1 + p2 * hit2)


def min_error_probability(ensemble: PureEnsemble) -> DiscriminationResult:
    """Optimal projective measurement for two weighted pure states.

    The best projector is the eigenprojector of ``p1 rho1 - p2 rho2`` for its
    largest eigenvalue ``lam``, which is never negative; the success
    probability is ``p2 + lam``.
    """
    (p1, k1), (p2, k2) = ensemble.elements
    delta = p1 * k1.projector() - p2 * k2.projector()
    es = eig_hermitian_2x2(delta)
    lam = max(es.eigenvalues[0], 0.0)
    pe = clamp(1.0 - (p2 + lam), 0.0, 0.5, "min_error_probability")
    bloch = es.eigenvectors[0].bloch()
    return DiscriminationResult(pe, bloch / np.linalg.norm(bloch))


def helstrom_error(ensemble: PureEnsemble) -> float:
    """``(1 - sqrt(1 - 4 p1 p2 |<psi1|psi2>|^2)) / 2``."""
    (p1, k1), (p2, k2) = ensemble.elements
    radicand = max(1.0 - 4.0 * p1 * p2 * overlap2(k1, k2), 0.0)
    return 0.5 * (1.0 - math.sqrt(radicand))


def ensemble_from_state(rho: QubitState, basis: OrthonormalBasis) -> PureEnsemble:
    """Split ``rho`` into ``{<x_i|rho|x_i>, sqrt(rho)|x_i> / norm}``.

    Raises:
        DegenerateWeight: if a weight is below ``WEIGHT_TOL``.
    """
    s = matrix_sqrt_psd(rho.matrix)
    elements = []
    for x in basis.kets:
        v = s @ x.amplitudes
        eta = float(np.vdot(x.amplitudes, rho.matrix @ x.amplitudes).real)
        if eta < WEIGHT_TOL:
            raise DegenerateWeight(f"basis weight {eta:.3e} below {WEIGHT_TOL:g}")
        elements.append((eta, PureKet(v / math.sqrt(eta))))
    total = elements[0][0] + elements[1][0]
    return PureEnsemble(tuple((w / total, k) for w, k in elements))


def state_from_ensemble(ensemble: PureEnsemble) -> QubitState:
    """``sum_i p_i |psi_i><psi_i|``."""
    return QubitState(sum(w * k.projector() for w, k in ensemble.elements))


def coherence_error_pair(rho: QubitState, basis: OrthonormalBasis) -> tuple[float, float]:
    """``(C_g^X(rho), P_e)`` for the ensemble induced by ``rho`` and ``X``.

    A degenerate weight means ``rho`` is a basis projector; both values are 0.
    """
    c = geometric_coherence(rho, basis).value
    try:
        ensemble = ensemble_from_state(rho, basis)
    except DegenerateWeight:
        return c, 0.0
    return c, min_error_probability(ensemble).error_probability


def error_ceiling_check(ensemble: PureEnsemble) -> BoundReport:
    """Error probability against the purity ceiling of the averaged state.

    ``extras`` carries the purity, the mixedness form ``P_e + sqrt(S_L)/2``
    (which must stay below 1/2) and the saturation flag of the averaged state
    in the basis that generates the ensemble.
    """
    pe = min_error_probability(ensemble).error_probability
    rho = state_from_ensemble(ensemble)
    p = purity(rho)
    ceiling = purity_ceiling(p)
    slack = ceiling - pe
    mixedness_form = pe + 0.5 * math.sqrt(max(2.0 * (1.0 - p), 0.0))
    extras = {"purity": p, "mixedness_form": mixedness_form}
    basis = generating_basis(ensemble)
    if basis is not None:
        extras["diagonals_half"] = float(ceiling_saturated(rho, basis))
    return BoundReport(pe, ceiling, slack, slack <= SAT_TOL, upper=True, extras=extras)


def generating_basis(ensemble: PureEnsemble) -> OrthonormalBasis | None:
    """Basis ``X`` with ``sqrt(p_i)|psi_i> = sqrt(rho)|x_i>``, when ``rho`` is full rank.

    ``|x_i> = sqrt(p_i) rho^{-1/2} |psi_i>``. Returns None for rank-deficient states.
    """
    rho = state_from_ensemble(ensemble)
    es = eig_hermitian_2x2(rho.matrix)
    if es.eigenvalues[1] < WEIGHT_TOL:
        return None
    inv_sqrt = sum(v.projector() / math.sqrt(lam) for lam, v in zip(es.eigenvalues, es.eigenvectors))
    vecs = [math.sqrt(w) * inv_sqrt @ k.amplitudes for w, k in ensemble.elements]
    try:
        return OrthonormalBasis.from_vectors(*vecs)
    except QubitError:
        return None
