"""Seeded generators for random kets, states, bases and ensembles.

Streams are driven by the Philox-4x64-10 counter-based generator as shipped
in ``numpy.random.Philox``, with key ``(seed, 0)`` and the counter starting
at zero. Everything above the raw
64-bit words is done here so that another implementation can reproduce a
stream exactly:

* uniform doubles on [0, 1) are ``(word >> 11) * 2**-53``;
* standard normals come in pairs from the Marsaglia polar method, using
  uniforms ``u, v = 2 U - 1`` and rejecting ``s = u^2 + v^2`` outside (0, 1);
* shard ``k`` of a campaign uses the stream keyed by the same seed advanced
  by ``k`` Philox jumps (``Philox(key=seed).jumped(k)``, i.e. ``k * 2**128``
  draws), so shards never overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .discrimination import WEIGHT_TOL, PureEnsemble
from .qubit import DomainError, OrthonormalBasis, PureKet, QubitState, fix_phase

_BLOCK = 512
_TWO_M53 = 2.0**-53

Family = Literal["haar_pure", "uniform_bloch_ball", "fixed_purity", "haar_basis", "random_ensemble"]
FAMILIES = ("haar_pure", "uniform_bloch_ball", "fixed_purity", "haar_basis", "random_ensemble")


@dataclass(frozen=True)
class SampleConfig:
    seed: int
    count: int
    family: Family
    purity: float | None = None

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.count < 1:
            raise ValueError(f"count must be positive, got {self.count}")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown sample family {self.family!r}")
        if self.family == "fixed_purity":
            if self.purity is None or not 0.5 <= self.purity <= 1.0:
                raise DomainError(f"fixed_purity needs a purity in [1/2, 1], got {self.purity!r}")


class SampleStream:
    """A single deterministic stream of samples. Not thread-safe; one per shard."""

    def __init__(self, seed: int, shard: int = 0):
        bitgen = np.random.Philox(key=seed)
        if shard:
            bitgen = bitgen.jumped(shard)
        self._bitgen = bitgen
        self._buf = np.empty(0, dtype=np.uint64)
        self._pos = 0
        self._spare: float | None = None

    def _word(self) -> int:
        if self._pos >= len(self._buf):
            self._buf = self._bitgen.random_raw(_BLOCK)
            self._pos = 0
        w = int(self._buf[self._pos])
        self._pos += 1
        return w

    def uniform(self) -> float:
        return (self._word() >> 11) * _TWO_M53

    def normal(self) -> float:
        if self._spare is not None:
            z, self._spare = self._spare, None
            return z
        while True:
            u = 2.0 * self.uniform() - 1.0
            v = 2.0 * self.uniform() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                break
        factor = math.sqrt(-2.0 * math.log(s) / s)
        self._spare = v * factor
        return u * factor

    def _unit3(self) -> np.ndarray:
        while True:
            g = np.array([self.normal(), self.normal(), self.normal()])
            n = math.sqrt(float(g @ g))
            if n > 0:
                return g / n

    def _complex_gaussian(self, n: int) -> np.ndarray:
        return np.array([complex(self.normal(), self.normal()) for _ in range(n)])

    def pure(self) -> PureKet:
        """Ket uniform on the Bloch sphere, phase fixed."""
        while True:
            z = self._complex_gaussian(2)
            n = np.linalg.norm(z)
            if n > 0:
                return PureKet(fix_phase(z / n))

    def state(self, family: Family = "uniform_bloch_ball", purity: float | None = None) -> QubitState:
        if family == "haar_pure":
            return QubitState.from_ket(self.pure())
        if family == "uniform_bloch_ball":
            direction = self._unit3()
            radius = self.uniform() ** (1.0 / 3.0)
            return QubitState.from_bloch(radius * direction)
        if family == "fixed_purity":
            if purity is None or not 0.5 <= purity <= 1.0:
                raise DomainError(f"fixed_purity needs a purity in [1/2, 1], got {purity!r}")
            radius = math.sqrt(2.0 * purity - 1.0)
            if radius == 0.0:
                return QubitState.maximally_mixed()
            return QubitState.from_bloch(radius * self._unit3())
        raise ValueError(f"{family!r} is not a state family")

    def basis(self) -> OrthonormalBasis:
        """Columns of a Haar-random unitary (Gram-Schmidt on a complex Gaussian), phase fixed."""
        while True:
            g = self._complex_gaussian(4).reshape(2, 2)
            c0, c1 = g[:, 0], g[:, 1]
            n0 = np.linalg.norm(c0)
            if n0 == 0:
                continue
            e0 = c0 / n0
            w = c1 - np.vdot(e0, c1) * e0
            n1 = np.linalg.norm(w)
            if n1 < 1e-8:
                continue
            e1 = w / n1
            return OrthonormalBasis((PureKet(fix_phase(e0)), PureKet(fix_phase(e1))))

    def ensemble(self) -> PureEnsemble:
        lo = 10 * WEIGHT_TOL
        k1, k2 = self.pure(), self.pure()
        p1 = lo + (1.0 - 2 * lo) * self.uniform()
        return PureEnsemble(((p1, k1), (1.0 - p1, k2)))

    def draw(self, config: SampleConfig):
        if config.family == "haar_basis":
            return self.basis()
        if config.family == "random_ensemble":
            return self.ensemble()
        return self.state(config.family, config.purity)


def sample(config: SampleConfig, shard: int = 0) -> list:
    """``config.count`` draws of ``config.family`` from shard ``shard`` of ``config.seed``."""
    stream = SampleStream(config.seed, shard)
    return [stream.draw(config) for _ in range(config.count)]


def sample_pure(stream: SampleStream) -> PureKet:
    return stream.pure()


def sample_state(stream: SampleStream, family: Family = "uniform_bloch_ball", purity: float | None = None) -> QubitState:
    return stream.state(family, purity)


def sample_basis(stream: SampleStream) -> OrthonormalBasis:
    return stream.basis()


def sample_ensemble(stream: SampleStream) -> PureEnsemble:
    return stream.ensemble()


def random_unitary(stream: SampleStream) -> np.ndarray:
    b = stream.basis()
    return np.column_stack([k.amplitudes for k in b.kets])
