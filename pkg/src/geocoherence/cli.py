"""Command-line interface: ``geocoherence <command> ...``.

Exit codes: 0 on success, 1 when a verification campaign finds a violation,
2 on malformed or invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import discrimination, figures, tradeoffs, verification
from .coherence import geometric_coherence, geometric_coherence_oracle
from .qubit import (
    NAMED_BASES,
    OrthonormalBasis,
    PureKet,
    QubitError,
    QubitState,
    ket,
    maximally_coherent_mixed,
    purity,
)
from .sampling import SampleStream

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class SpecError(ValueError):
    pass


def _complexes(text: str, n: int, what: str) -> list[complex]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise SpecError(f"{what} needs {n} comma-separated numbers, got {len(parts)}")
    try:
        values = [complex(p.replace(" ", "")) for p in parts]
    except ValueError as exc:
        raise SpecError(f"{what}: cannot parse {text!r} as numbers") from exc
    if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in values):
        raise SpecError(f"{what}: entries must be finite")
    return values


def parse_state(spec: str) -> QubitState:
    """``bloch:x,y,z`` | ``matrix:m00,m01,m10,m11`` | ``mcm:q``."""
    kind, sep, body = spec.partition(":")
    if not sep:
        raise SpecError(f"state spec {spec!r} must look like bloch:..., matrix:... or mcm:...")
    if kind == "bloch":
        values = _complexes(body, 3, "bloch vector")
        if any(v.imag for v in values):
            raise SpecError("bloch vector components must be real")
        return QubitState.from_bloch([v.real for v in values])
    if kind == "matrix":
        return QubitState(np.array(_complexes(body, 4, "matrix")).reshape(2, 2))
    if kind == "mcm":
        try:
            q = float(body)
        except ValueError as exc:
            raise SpecError(f"mcm parameter {body!r} is not a number") from exc
        return maximally_coherent_mixed(q)
    raise SpecError(f"unknown state kind {kind!r}")


def parse_basis(spec: str) -> OrthonormalBasis:
    """A named basis or ``kets:a0,a1;b0,b1`` (each ket is normalized, then orthogonality is checked)."""
    if spec in NAMED_BASES:
        return NAMED_BASES[spec]
    kind, sep, body = spec.partition(":")
    if kind != "kets" or not sep:
        raise SpecError(f"basis spec {spec!r} must be one of {sorted(NAMED_BASES)} or kets:a0,a1;b0,b1")
    halves = body.split(";")
    if len(halves) != 2:
        raise SpecError("kets: needs two kets separated by ';'")
    return OrthonormalBasis(tuple(PureKet.from_unnormalized(_complexes(h, 2, "ket")) for h in halves))


def fmt(x: float) -> float:
    """Round to 12 significant digits; ``-0.0`` becomes ``0.0``."""
    return float(f"{x:.12g}") + 0.0


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}j"


def format_state(rho: QubitState) -> str:
    return "matrix:" + ",".join(_fmt_complex(complex(z)) for z in rho.matrix.reshape(-1))


def format_basis(basis: OrthonormalBasis) -> str:
    return "kets:" + ";".join(",".join(_fmt_complex(complex(z)) for z in k.amplitudes) for k in basis.kets)


def _jsonable(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return fmt(float(value))
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def emit(report: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    report = _jsonable(report)
    if as_json:
        out.write(json.dumps(report) + "\n")
        return
    width = max(len(k) for k in report)
    for key, value in report.items():
        out.write(f"{key:<{width}}  {value}\n")


def cmd_coherence(args) -> int:
    rho = parse_state(args.state)
    basis = parse_basis(args.basis)
    c = geometric_coherence(rho, basis)
    p = purity(rho)
    report = {
        "state": format_state(rho),
        "basis": format_basis(basis),
        "coherence": c.value,
        "basis_diagonals": list(c.basis_diagonals),
        "purity": p,
        "mixedness": tradeoffs.mixedness(rho),
        "ceiling": tradeoffs.purity_ceiling(p),
        "saturated": tradeoffs.ceiling_saturated(rho, basis),
    }
    if args.oracle:
        oracle = geometric_coherence_oracle(rho, basis)
        report["oracle"] = oracle
        report["oracle_gap"] = abs(oracle - c.value)
    emit(report, args.json)
    return EXIT_OK


def cmd_uncertainty(args) -> int:
    rho = parse_state(args.state)
    bases = [parse_basis(b) for b in args.bases]
    if len(bases) not in (2, 3):
        raise SpecError(f"--bases takes two or three bases, got {len(bases)}")
    report = {
        "state": format_state(rho),
        "bases": [format_basis(b) for b in bases],
        "coherences": [geometric_coherence(rho, b).value for b in bases],
    }
    if len(bases) == 2:
        r = tradeoffs.two_basis_check(rho, *bases)
        report["incompatibility"] = r.extras["incompatibility"]
    else:
        r = tradeoffs.three_basis_check(rho, *bases)
        report["incompatibility"] = [r.extras["c1"], r.extras["c2"], r.extras["c3"]]
        report["case"] = r.extras["case"]
    report.update(purity=r.extras["purity"], sum=r.lhs, lower_bound=r.bound, slack=r.slack, saturated=r.saturated)
    emit(report, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verification.run_campaign(
        args.campaign, args.samples, args.seed, fixture=args.fixture, workers=args.workers
    )
    emit(report.as_dict(), args.json)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_figure(args) -> int:
    text = figures.figure_csv(args.figure, args.steps)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def example4_ensemble(theta: float, basis: OrthonormalBasis | None = None) -> discrimination.PureEnsemble:
    """``{1/2, cos t|x1> + sin t|x2>}, {1/2, sin t|x1> + cos t|x2>}``."""
    x1, x2 = (k.amplitudes for k in (basis or NAMED_BASES["computational"]).kets)
    c, s = math.cos(theta), math.sin(theta)
    return discrimination.PureEnsemble(((0.5, PureKet(c * x1 + s * x2)), (0.5, PureKet(s * x1 + c * x2))))


def parse_ensemble(spec: str) -> discrimination.PureEnsemble:
    """``p1;a0,a1;b0,b1`` (kets are normalized for you)."""
    parts = spec.split(";")
    if len(parts) != 3:
        raise SpecError("ensemble spec must be p1;a0,a1;b0,b1")
    try:
        p1 = float(parts[0])
    except ValueError as exc:
        raise SpecError(f"weight {parts[0]!r} is not a number") from exc
    if not 0.0 <= p1 <= 1.0:
        raise SpecError(f"weight {p1!r} outside [0, 1]")
    k1, k2 = (ket(*_complexes(p, 2, "ket")) for p in parts[1:])
    return discrimination.PureEnsemble(((p1, k1), (1.0 - p1, k2)))


def cmd_discriminate(args) -> int:
    if args.example4 is not None:
        ensemble = example4_ensemble(args.example4)
    elif args.random is not None:
        ensemble = SampleStream(args.random).ensemble()
    else:
        ensemble = parse_ensemble(args.ensemble)
    result = discrimination.min_error_probability(ensemble)
    r = discrimination.error_ceiling_check(ensemble)
    report = {
        "weights": list(ensemble.weights),
        "kets": [[_fmt_complex(complex(z)) for z in k.amplitudes] for k in ensemble.kets],
        "error_probability": result.error_probability,
        "helstrom_closed_form": discrimination.helstrom_error(ensemble),
        "optimal_projector_bloch": list(result.optimal_projector_bloch),
        "purity": r.extras["purity"],
        "ceiling": r.bound,
        "slack": r.slack,
        "mixedness_form": r.extras["mixedness_form"],
    }
    emit(report, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geocoherence",
        description="Geometric coherence of qubit states, its trade-off relations and their verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    basis_help = f"one of {', '.join(NAMED_BASES)} or kets:a0,a1;b0,b1 (kets are normalized)"
    state_help = "bloch:x,y,z | matrix:m00,m01,m10,m11 | mcm:q"

    p = sub.add_parser("coherence", help="geometric coherence of a state in a basis")
    p.add_argument("--state", required=True, help=state_help)
    p.add_argument("--basis", required=True, help=basis_help)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force fidelity maximization")
    p.add_argument("--json", action="store_true", help="print a single-line JSON object")
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("uncertainty", help="summed coherence over 2 or 3 bases against its lower bound")
    p.add_argument("--state", required=True, help=state_help)
    p.add_argument("--bases", required=True, nargs="+", metavar="BASIS", help=basis_help)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_uncertainty)

    p = sub.add_parser("verify", help="run a randomized verification campaign")
    p.add_argument("campaign", choices=verification.CAMPAIGNS)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fixture", choices=verification.FIXTURES, default=None,
                   help="replace random states by a fixed state")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write curve data as CSV")
    p.add_argument("figure", choices=figures.FIGURES)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("discriminate", help="minimum-error discrimination of a two-state pure ensemble")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ensemble", help="p1;a0,a1;b0,b1")
    group.add_argument("--example4", type=float, metavar="THETA",
                       help="equal-weight cos/sin ensemble in the computational basis")
    group.add_argument("--random", type=int, metavar="SEED", help="a random ensemble from SEED")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_discriminate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        parser.error("--samples must be at least 1")
    if getattr(args, "steps", 2) < 2:
        parser.error("--steps must be at least 2")
    try:
        return args.func(args)
    except (SpecError, QubitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
