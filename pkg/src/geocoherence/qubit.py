"""Validated qubit types and closed-form 2x2 Hermitian linear algebra.

Every other module in the package builds on the three state-like types
defined here (:class:`PureKet`, :class:`QubitState`, :class:`OrthonormalBasis`)
and on the non-iterative eigensolver :func:`eig_hermitian_2x2`.
"""

from __future__ import annotations

import logging
import math
import threading
from collections import Counter
from dataclasses import dataclass

import numpy as np

logger = logging.getLogger(__name__)

NORM_TOL = 1e-9
HERM_TOL = 1e-9
ORTHO_TOL = 1e-9
PSD_TOL = 1e-10
RECON_TOL = 1e-10

# Eigenvalue splitting below which a Hermitian 2x2 matrix is treated as
# proportional to the identity.
DEGENERACY_TOL = 1e-14
# Amplitudes at or below this magnitude are skipped by the phase convention.
PHASE_TOL = 1e-12

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


class QubitError(ValueError):
    """Base class for invalid numerical input."""


class NonHermitianInput(QubitError):
    pass


class NotPositiveSemidefinite(QubitError):
    pass


class InvalidState(QubitError):
    pass


class InvalidKet(QubitError):
    pass


class InvalidBasis(QubitError):
    pass


class NumericalDomainError(QubitError):
    """A quantity that is provably in range fell outside it by more than round-off."""


class DomainError(QubitError):
    """An argument lies outside the domain of a formula."""


_clamp_lock = threading.Lock()
_clamp_counts: Counter[str] = Counter()


def record_clamp(site: str, amount: float) -> None:
    """Count a one-sided clamp at ``site``; ``amount`` is the distance moved."""
    with _clamp_lock:
        _clamp_counts[site] += 1
    logger.debug("clamped %s by %.3e", site, amount)


def clamp_counts() -> dict[str, int]:
    """Snapshot of the clamp diagnostics counter."""
    with _clamp_lock:
        return dict(_clamp_counts)


def reset_clamp_counts() -> None:
    with _clamp_lock:
        _clamp_counts.clear()


def clamp(value: float, lo: float, hi: float, site: str) -> float:
    if value < lo:
        record_clamp(site, lo - value)
        return lo
    if value > hi:
        record_clamp(site, value - hi)
        return hi
    return value


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def _check_finite(a: np.ndarray, what: str, exc: type[QubitError]) -> None:
    if not np.all(np.isfinite(a)):
        raise exc(f"{what} has non-finite entries")


def fix_phase(v: np.ndarray) -> np.ndarray:
    """Multiply ``v`` by a global phase so its first nonzero amplitude is real positive."""
    v = np.asarray(v, dtype=complex)
    for i, amp in enumerate(v):
        if abs(amp) > PHASE_TOL:
            out = v * (abs(amp) / amp)
            out[i] = abs(amp)
            return out
    return v.copy()


@dataclass(frozen=True, eq=False)
class PureKet:
    """Normalized two-component complex vector."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = _frozen(self.amplitudes).reshape(-1)
        if a.shape != (2,):
            raise InvalidKet(f"ket must have 2 amplitudes, got shape {a.shape}")
        _check_finite(a, "ket", InvalidKet)
        norm2 = float(np.vdot(a, a).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise InvalidKet(f"ket not normalized: <psi|psi> = {norm2!r}")
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def from_unnormalized(cls, v) -> PureKet:
        v = np.asarray(v, dtype=complex)
        n = np.linalg.norm(v)
        if not np.isfinite(n) or n == 0:
            raise InvalidKet("cannot normalize a zero or non-finite vector")
        return cls(v / n)

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def phase_fixed(self) -> PureKet:
        return PureKet(fix_phase(self.amplitudes))

    def bloch(self) -> np.ndarray:
        return bloch_vector(self.projector())

    def __repr__(self):
        return f"PureKet({self.amplitudes.tolist()!r})"


@dataclass(frozen=True, eq=False)
class QubitState:
    """2x2 density matrix: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.shape != (2, 2):
            raise InvalidState(f"density matrix must be 2x2, got shape {m.shape}")
        _check_finite(m, "density matrix", InvalidState)
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > HERM_TOL:
            raise NonHermitianInput(f"not Hermitian: max|rho - rho^dag| = {herm:.3e}")
        tr = m[0, 0].real + m[1, 1].real
        if abs(tr - 1.0) > NORM_TOL:
            raise InvalidState(f"trace is {tr!r}, expected 1")
        lam_min = _eigvals_hermitian(m)[1]
        if lam_min < -PSD_TOL:
            raise NotPositiveSemidefinite(f"not positive semidefinite: min eigenvalue {lam_min:.3e}")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_bloch(cls, r) -> QubitState:
        r = np.asarray(r, dtype=float)
        if r.shape != (3,):
            raise InvalidState("Bloch vector must have three components")
        if not np.all(np.isfinite(r)):
            raise InvalidState("Bloch vector has non-finite components")
        norm = float(np.linalg.norm(r))
        if norm > 1 + NORM_TOL:
            raise InvalidState(f"Bloch vector length {norm!r} exceeds 1")
        return cls(0.5 * (np.eye(2) + np.tensordot(r, PAULI, axes=1)))

    @classmethod
    def from_ket(cls, psi: PureKet) -> QubitState:
        return cls(psi.projector())

    @classmethod
    def maximally_mixed(cls) -> QubitState:
        return cls(np.eye(2) / 2)

    def bloch(self) -> np.ndarray:
        return bloch_vector(self.matrix)

    def diagonals(self, basis: OrthonormalBasis) -> tuple[float, float]:
        """``(<x1|rho|x1>, <x2|rho|x2>)`` in the given basis."""
        return tuple(
            float(np.vdot(k.amplitudes, self.matrix @ k.amplitudes).real) for k in basis.kets
        )

    def __repr__(self):
        return f"QubitState({self.matrix.tolist()!r})"


@dataclass(frozen=True, eq=False)
class OrthonormalBasis:
    kets: tuple[PureKet, PureKet]

    def __post_init__(self):
        kets = tuple(k if isinstance(k, PureKet) else PureKet(k) for k in self.kets)
        if len(kets) != 2:
            raise InvalidBasis(f"a qubit basis has two kets, got {len(kets)}")
        inner = abs(np.vdot(kets[0].amplitudes, kets[1].amplitudes))
        if inner > ORTHO_TOL:
            raise InvalidBasis(f"kets not orthogonal: |<k1|k2>| = {inner:.3e}")
        object.__setattr__(self, "kets", kets)

    @classmethod
    def from_vectors(cls, v1, v2) -> OrthonormalBasis:
        return cls((PureKet(v1), PureKet(v2)))

    def swapped(self) -> OrthonormalBasis:
        return OrthonormalBasis((self.kets[1], self.kets[0]))

    def transformed(self, u: np.ndarray) -> OrthonormalBasis:
        """Basis ``{U|x1>, U|x2>}``."""
        return OrthonormalBasis(tuple(PureKet(u @ k.amplitudes) for k in self.kets))

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        return tuple(k.projector() for k in self.kets)

    def __repr__(self):
        return f"OrthonormalBasis({[k.amplitudes.tolist() for k in self.kets]!r})"


@dataclass(frozen=True, eq=False)
class Eigensystem2:
    """Eigenvalues in descending order with matching orthonormal eigenvectors."""

    eigenvalues: tuple[float, float]
    eigenvectors: tuple[PureKet, PureKet]

    def reconstruct(self) -> np.ndarray:
        return sum(lam * v.projector() for lam, v in zip(self.eigenvalues, self.eigenvectors))

    def basis(self) -> OrthonormalBasis:
        return OrthonormalBasis(self.eigenvectors)


def _hermitian_parts(m: np.ndarray) -> tuple[float, float, complex]:
    a = m[0, 0].real
    d = m[1, 1].real
    b = 0.5 * (complex(m[0, 1]) + complex(m[1, 0]).conjugate())
    return a, d, b


def _eigvals_hermitian(m: np.ndarray) -> tuple[float, float]:
    a, d, b = _hermitian_parts(m)
    mean = 0.5 * (a + d)
    half = math.hypot(0.5 * (a - d), abs(b))
    return mean + half, mean - half


def eig_hermitian_2x2(m) -> Eigensystem2:
    """Closed-form eigendecomposition of a Hermitian 2x2 matrix.

    Eigenvalues come back in descending order. Each eigenvector is phase
    fixed (first nonzero amplitude real positive); a matrix proportional to
    the identity gets the computational basis.

    Raises:
        NonHermitianInput: if ``max|m - m^dag|`` exceeds ``HERM_TOL``.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonHermitianInput("matrix has non-finite entries")
    herm = float(np.max(np.abs(m - m.conj().T)))
    if herm > HERM_TOL:
        raise NonHermitianInput(f"max|m - m^dag| = {herm:.3e} exceeds {HERM_TOL:g}")

    a, d, b = _hermitian_parts(m)
    mean = 0.5 * (a + d)
    half = math.hypot(0.5 * (a - d), abs(b))
    lam1, lam2 = mean + half, mean - half
    if half <= DEGENERACY_TOL:
        v1 = np.array([1, 0], dtype=complex)
    else:
        # (m - lam1) v = 0 from either row; keep the better-conditioned one
        r1 = np.array([b, lam1 - a], dtype=complex)
        r2 = np.array([lam1 - d, b.conjugate()], dtype=complex)
        v1 = r1 if np.linalg.norm(r1) >= np.linalg.norm(r2) else r2
        v1 = fix_phase(v1 / np.linalg.norm(v1))
    v2 = fix_phase(np.array([-v1[1].conjugate(), v1[0].conjugate()]))
    return Eigensystem2((lam1, lam2), (PureKet(v1), PureKet(v2)))


def matrix_sqrt_psd(m) -> np.ndarray:
    """Hermitian PSD square root of a Hermitian PSD 2x2 matrix.

    Eigenvalues in ``[-PSD_TOL, 0)`` are clamped to zero first.

    Raises:
        NotPositiveSemidefinite: if the smallest eigenvalue is below ``-PSD_TOL``.
    """
    es = eig_hermitian_2x2(m)
    roots = []
    for lam in es.eigenvalues:
        if lam < -PSD_TOL:
            raise NotPositiveSemidefinite(f"eigenvalue {lam:.3e} below -{PSD_TOL:g}")
        if lam < 0:
            record_clamp("matrix_sqrt_psd.eigenvalue", -lam)
            lam = 0.0
        roots.append(math.sqrt(lam))
    v1, v2 = (v.projector() for v in es.eigenvectors)
    return roots[0] * v1 + roots[1] * v2


def purity(rho: QubitState) -> float:
    """``tr(rho^2)``, clamped to ``[1/2, 1]``."""
    p = float(np.sum(np.abs(rho.matrix) ** 2))
    return clamp(p, 0.5, 1.0, "purity")


def overlap2(a: PureKet, b: PureKet) -> float:
    """Squared overlap ``|<a|b>|^2`` clamped to ``[0, 1]``. Exactly symmetric."""
    x0, x1 = a.amplitudes
    y0, y1 = b.amplitudes
    s = x0.conjugate() * y0 + x1.conjugate() * y1
    return clamp(s.real * s.real + s.imag * s.imag, 0.0, 1.0, "overlap2")


def bloch_vector(m: np.ndarray) -> np.ndarray:
    """Real 3-vector ``r`` with ``m = (I + r.sigma)/2``."""
    m = np.asarray(m, dtype=complex)
    return np.array([np.trace(m @ p).real for p in PAULI])


def ket(*amplitudes) -> PureKet:
    """Normalized ket from unnormalized amplitudes, e.g. ``ket(1, 2)``."""
    return PureKet.from_unnormalized(amplitudes)


def maximally_coherent_mixed(q: float) -> QubitState:
    """``(1-q)/2 I + q |psi+><psi+|`` for ``q`` in [0, 1]."""
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"mixing parameter q={q!r} outside [0, 1]")
    # entries written out so that they are exact in binary
    return QubitState(np.array([[0.5, q / 2], [q / 2, 0.5]], dtype=complex))


COMPUTATIONAL = OrthonormalBasis((ket(1, 0), ket(0, 1)))
HADAMARD = OrthonormalBasis((ket(1, 1), ket(1, -1)))
CIRCULAR = OrthonormalBasis((ket(1, 1j), ket(1, -1j)))
# {(|0> + 2|1>)/sqrt5, (-2|0> + |1>)/sqrt5}
TILTED = OrthonormalBasis((ket(1, 2), ket(-2, 1)))

NAMED_BASES = {
    "computational": COMPUTATIONAL,
    "hadamard": HADAMARD,
    "circular": CIRCULAR,
    "ex2y": TILTED,
}
