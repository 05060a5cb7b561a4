"""Randomized verification campaigns for every relation in the package.

A campaign draws ``samples`` random inputs, evaluates one relation on each
and reduces the results with order-independent reductions (min, max, sum),
so the outcome does not depend on how shards are scheduled. Samples are cut
into shards of ``SHARD_SIZE``; shard ``k`` draws from
``SampleStream(seed, shard=k)``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import coherence, discrimination, tradeoffs
from .qubit import OrthonormalBasis, QubitState, overlap2
from .sampling import SampleStream

SHARD_SIZE = 1000

DISCRIMINATION_TOL = 1e-8
ROUND_TRIP_TOL = 1e-10
ORACLE_TOL = 1e-6
TWO_BASIS_ORACLE_TOL = 1e-4
THREE_BASIS_ORACLE_TOL = 1e-3

CAMPAIGNS = ("t1", "c1", "l1", "t2", "t3", "lemma2", "c4", "oracle2", "oracle3", "cg")
FIXTURES = ("maximally_mixed",)


@dataclass
class CampaignReport:
    name: str
    samples: int = 0
    worst_slack: float = math.inf
    violations: int = 0
    saturated: int = 0
    metrics: dict[str, float] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def merge(self, other: CampaignReport) -> CampaignReport:
        out = CampaignReport(
            self.name,
            self.samples + other.samples,
            min(self.worst_slack, other.worst_slack),
            self.violations + other.violations,
            self.saturated + other.saturated,
            dict(self.metrics),
            dict(self.counts),
        )
        for key, value in other.metrics.items():
            out.metrics[key] = max(out.metrics.get(key, -math.inf), value)
        for key, value in other.counts.items():
            out.counts[key] = out.counts.get(key, 0) + value
        return out

    def observe(self, slack: float, violated: bool, saturated: bool = False, **metrics: float) -> None:
        self.samples += 1
        self.worst_slack = min(self.worst_slack, float(slack))
        self.violations += int(violated)
        self.saturated += int(saturated)
        for key, value in metrics.items():
            self.metrics[key] = max(self.metrics.get(key, -math.inf), float(value))

    def as_dict(self) -> dict:
        return {
            "campaign": self.name,
            "samples": self.samples,
            "worst_slack": self.worst_slack,
            "violations": self.violations,
            "saturated": self.saturated,
            **self.metrics,
            **self.counts,
        }


def _state(stream: SampleStream, fixture: str | None) -> QubitState:
    if fixture == "maximally_mixed":
        return QubitState.maximally_mixed()
    return stream.state("uniform_bloch_ball")


def _one(name: str, stream: SampleStream, report: CampaignReport, fixture: str | None) -> None:
    if name == "t1":
        rho, basis = _state(stream, fixture), stream.basis()
        r = tradeoffs.ceiling_check(rho, basis)
        report.observe(r.slack, r.violated, r.saturated)
    elif name == "c1":
        rho, basis = _state(stream, fixture), stream.basis()
        r = tradeoffs.complementarity_check(rho, basis)
        report.observe(r.slack, r.violated, r.saturated)
    elif name == "l1":
        x, z, r = stream.pure(), stream.pure(), stream.pure()
        a, b, c = overlap2(x, r), overlap2(z, r), overlap2(z, x)
        margin = min(
            1 + math.sqrt(c) - (a + b),
            math.sqrt(max(1 - c, 0.0)) - abs(a - b),
            (a + b) - (1 - math.sqrt(c)),
        )
        ok = tradeoffs.overlap_triple_feasible(a, b, c, dim2=True)
        report.observe(margin, not ok)
    elif name == "t2":
        rho, x, y = _state(stream, fixture), stream.basis(), stream.basis()
        r = tradeoffs.two_basis_check(rho, x, y)
        report.observe(r.slack, r.violated, r.saturated)
    elif name == "t3":
        rho = _state(stream, fixture)
        x, y, z = stream.basis(), stream.basis(), stream.basis()
        r = tradeoffs.three_basis_check(rho, x, y, z)
        report.observe(r.slack, r.violated, r.saturated)
        key = f"case{r.extras['case']}_samples"
        report.counts[key] = report.counts.get(key, 0) + 1
    elif name == "lemma2":
        rho, basis = _state(stream, fixture), stream.basis()
        c, pe = discrimination.coherence_error_pair(rho, basis)
        gap = abs(c - pe)
        residual = 0.0
        try:
            ens = discrimination.ensemble_from_state(rho, basis)
            back = discrimination.state_from_ensemble(ens)
            residual = float(np.max(np.abs(back.matrix - rho.matrix)))
        except discrimination.DegenerateWeight:
            pass
        bad = gap >= DISCRIMINATION_TOL or residual >= ROUND_TRIP_TOL
        report.observe(-gap, bad, max_gap=gap, max_round_trip=residual)
    elif name == "c4":
        ens = stream.ensemble()
        r = discrimination.error_ceiling_check(ens)
        helstrom_gap = abs(r.lhs - discrimination.helstrom_error(ens))
        report.observe(r.slack, r.violated, r.saturated, max_helstrom_gap=helstrom_gap)
    elif name == "cg":
        rho, basis = _state(stream, fixture), stream.basis()
        closed = coherence.geometric_coherence(rho, basis).value
        gap = abs(closed - coherence.geometric_coherence_oracle(rho, basis))
        report.observe(-gap, gap >= ORACLE_TOL, max_gap=gap)
    elif name == "oracle2":
        p = 0.5 + 0.5 * stream.uniform()
        c = 0.5 + 0.5 * stream.uniform()
        gap = abs(tradeoffs.two_basis_grid_oracle(p, c) - tradeoffs.two_basis_lower_bound(p, c))
        report.observe(-gap, gap >= TWO_BASIS_ORACLE_TOL, max_gap=gap)
    elif name == "oracle3":
        p = 0.5 + 0.5 * stream.uniform()
        cv = tradeoffs.IncompatibilityVector(*sorted((0.5 + 0.5 * stream.uniform() for _ in range(3)), reverse=True))
        oracle = tradeoffs.three_basis_grid_oracle(p, cv)
        bound = tradeoffs.three_basis_lower_bound(p, cv)
        report.observe(oracle - bound, oracle < bound - THREE_BASIS_ORACLE_TOL)
    else:
        raise ValueError(f"unknown campaign {name!r}; choose from {CAMPAIGNS}")


def run_shard(name: str, seed: int, shard: int, count: int, fixture: str | None = None) -> CampaignReport:
    stream = SampleStream(seed, shard)
    report = CampaignReport(name)
    for _ in range(count):
        _one(name, stream, report, fixture)
    return report


def run_campaign(
    name: str, samples: int, seed: int, fixture: str | None = None, workers: int = 1
) -> CampaignReport:
    """Run ``samples`` draws of campaign ``name``; results do not depend on ``workers``."""
    if name not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {name!r}; choose from {CAMPAIGNS}")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if fixture is not None and fixture not in FIXTURES:
        raise ValueError(f"unknown fixture {fixture!r}; choose from {FIXTURES}")
    jobs = []
    for shard, start in enumerate(range(0, samples, SHARD_SIZE)):
        jobs.append((name, seed, shard, min(SHARD_SIZE, samples - start), fixture))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: run_shard(*job), jobs))
    else:
        parts = [run_shard(*job) for job in jobs]
    report = CampaignReport(name)
    for part in parts:
        report = report.merge(part)
    return report


def _diagonal_half_state(stream: SampleStream, basis: OrthonormalBasis, imbalance: float) -> QubitState:
    d1, d2 = 0.5 + imbalance, 0.5 - imbalance
    radius = math.sqrt(d1 * d2) * math.sqrt(stream.uniform())
    phase = 2 * math.pi * stream.uniform()
    local = np.array([[d1, radius * np.exp(1j * phase)], [radius * np.exp(-1j * phase), d2]])
    u = np.column_stack([k.amplitudes for k in basis.kets])
    return QubitState(u @ local @ u.conj().T)


def constructed_ceiling_states(
    seed: int, count: int, imbalance: float = 0.0
) -> list[tuple[QubitState, OrthonormalBasis]]:
    """Random ``(rho, X)`` where ``rho`` has basis diagonals ``1/2 +- imbalance`` in ``X``.

    ``imbalance = 0`` lands exactly on the ceiling's saturation set.
    """
    stream = SampleStream(seed)
    out = []
    for _ in range(count):
        basis = stream.basis()
        out.append((_diagonal_half_state(stream, basis, imbalance), basis))
    return out
