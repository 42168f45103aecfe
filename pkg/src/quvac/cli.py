"""Command-line front-end.

Thin client over the core library: parses files, delegates, formats output.
Exit codes are stable across commands: 0 success/equal, 1 IO or parse
problem, 2 semantic invalidity, 3 inequality.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import channels, destruction, serialization
from .demo import qubit_demo_spec
from .exceptions import (
    BadTrace,
    DimensionMismatch,
    InvalidChannel,
    InvalidDimension,
    InvalidState,
    NotHermitian,
    NotPositive,
    ParseError,
    UnknownCase,
    UnknownEigenvalue,
)
from .numerics import DEFAULT_TOL, ToleranceConfig
from .state_space import EigenvalueSelection

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_UNEQUAL = 3

_SEMANTIC_ERRORS = (InvalidChannel, UnknownEigenvalue, NotHermitian, NotPositive, BadTrace, InvalidState)
_PARSE_ERRORS = (ParseError, OSError, UnknownCase, DimensionMismatch, InvalidDimension, ValueError)


def format_matrix(m: np.ndarray) -> str:
    """Aligned fixed-width 6-decimal display (files keep full precision)."""
    rows = []
    for row in np.asarray(m):
        rows.append("  " + "  ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row))
    return "\n".join(rows)


def _bool_str(value: bool) -> str:
    return "true" if value else "false"


def _tolerances(args) -> ToleranceConfig:
    if args.tolerance is None:
        return DEFAULT_TOL
    return ToleranceConfig(eq_tol=args.tolerance)


def cmd_verify(args) -> int:
    ch = serialization.load_channel(args.channel)
    report = channels.classify(ch, _tolerances(args))
    print(f"trace_preserving: {_bool_str(report.trace_preserving)}")
    print(f"trace_decreasing_strict: {_bool_str(report.trace_decreasing_strict)}")
    print(f"completely_positive: {_bool_str(report.completely_positive)}")
    print(f"pure: {_bool_str(report.pure)}")
    print(f"min_choi_eigenvalue: {report.min_choi_eigenvalue!r}")
    print(f"completeness_defect: {report.completeness_defect!r}")
    return EXIT_OK if report.completely_positive else EXIT_INVALID


def cmd_destroy(args) -> int:
    tol = _tolerances(args)
    obs = serialization.load_observable(args.observable, tol)
    rho = serialization.load_state(args.state, tol)
    selection = EigenvalueSelection(_parse_values(args.eigenvalues))
    spec = destruction.destruction_spec(obs, selection)
    p_destroyed, p_survived = destruction.destruction_probabilities(spec, rho)
    out = destruction.destruction_direct(spec, rho)
    print(f"p_destroyed: {p_destroyed!r}")
    print(f"p_survived: {p_survived!r}")
    print("output_state:")
    print(format_matrix(out.matrix))
    if args.emit_kraus:
        if args.output is None:
            print("error: --emit-kraus requires --output", file=sys.stderr)
            return EXIT_PARSE
        serialization.save_channel(args.output, destruction.destruction_kraus(spec))
        print(f"kraus_file: {args.output}")
    return EXIT_OK


def cmd_compare(args) -> int:
    tol = _tolerances(args)
    a = serialization.load_channel(args.channel_a)
    b = serialization.load_channel(args.channel_b)
    if a.space != b.space:
        raise DimensionMismatch("channels have different dimensions")
    diff = float(np.max(np.abs(channels.choi(a).matrix - channels.choi(b).matrix)))
    equal = channels.channels_equal(a, b, tol)
    print(f"max_choi_difference: {diff!r}")
    print(f"equal: {_bool_str(equal)}")
    return EXIT_OK if equal else EXIT_UNEQUAL


def cmd_choi(args) -> int:
    ch = serialization.load_channel(args.channel)
    j = channels.choi(ch).matrix
    eigenvalues = np.linalg.eigvalsh(j)[::-1]
    print(f"choi_dim: {j.shape[0]}")
    print("choi:")
    print(format_matrix(j))
    print("eigenvalues: " + " ".join(repr(float(v)) for v in eigenvalues))
    return EXIT_OK


def cmd_demo_qubit(args) -> int:
    spec = qubit_demo_spec(args.case)
    ch = destruction.destruction_kraus(spec)
    print(f"case: {args.case}")
    print("projector:")
    print(format_matrix(spec.projector.matrix))
    print("complement:")
    print(format_matrix(spec.complement.matrix))
    for i, element in enumerate(ch.elements):
        print(f"element {i}:")
        print(format_matrix(element))
    if args.output is not None:
        serialization.save_channel(args.output, ch)
        print(f"channel_file: {args.output}")
    return EXIT_OK


def _parse_values(text: str) -> tuple[float, ...]:
    if not text:
        return ()
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"invalid eigenvalue list {text!r}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None, help="override the equality tolerance")
    common.add_argument("--output", default=None, help="path for any written channel file")

    parser = argparse.ArgumentParser(prog="quvac", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="classify a channel file and check it is a quantum operation")
    p.add_argument("channel")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("destroy", parents=[common], help="apply destruction of the selected eigenspaces to a state")
    p.add_argument("observable")
    p.add_argument("state")
    p.add_argument(
        "--eigenvalues",
        default="",
        help="comma-separated eigenvalues marking the eigenspaces to destroy (empty for none)",
    )
    p.add_argument("--emit-kraus", action="store_true", help="also write the destruction channel to --output")
    p.set_defaults(func=cmd_destroy)

    p = sub.add_parser("compare", parents=[common], help="representation-independent equality of two channel files")
    p.add_argument("channel_a")
    p.add_argument("channel_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("choi", parents=[common], help="print the Choi matrix and its eigenvalues")
    p.add_argument("channel")
    p.set_defaults(func=cmd_choi)

    p = sub.add_parser("demo-qubit", parents=[common], help="print a worked single-qubit destruction case")
    p.add_argument("case", help='one of "i", "ii", "iii"')
    p.set_defaults(func=cmd_demo_qubit)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _SEMANTIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
