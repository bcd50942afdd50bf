"""Command-line front end.

    densecoding simulate --scheme pairwise --n 2 --message 5
    densecoding verify --scheme pairwise --n 3 --method roundtrip --format json
    densecoding rates --n-min 1 --n-max 4 --th 1 --tc 1 --format csv

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 feasibility (capacity-limit) error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

from .errors import CapacityLimitError, DomainError, VerificationError
from .protocols import (
    Scheme,
    SchemeConfig,
    decode,
    decoding_time,
    encode,
    prepare_initial_state,
)
from .rates import CapacitySource, TimingModel, compare_schemes
from .verification import DEFAULT_TOL, Method, capacity, check_feasible

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

SIMULATE_FIELDS = ["message", "decoded", "ok", "hadamard_count", "cnot_count", "decoding_time"]
VERIFY_FIELDS = [
    "scheme", "n", "method", "message_count", "bits", "expected_bits", "max_off_diagonal", "ok",
]
RATES_FIELDS = [
    "scheme", "N", "bits", "particles", "total_time", "rate_eq1", "rate_eq2", "erroneous_rate",
]


class UsageError(Exception):
    pass


def _num(x: Any) -> Any:
    """Serialize floats with 12 significant digits; integral bit counts as ints."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


def _bits(x: float) -> Any:
    return int(x) if float(x).is_integer() else _num(x)


def _clean(row: dict) -> dict:
    return {k: _num(v) for k, v in row.items()}


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


def render(doc: Any, rows: list[dict], fields: list[str], fmt: str, summary: str = "") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([_csv_cell(r.get(f)) for f in fields])
        return buf.getvalue()
    cells = [fields] + [[_csv_cell(r.get(f)) or "-" for f in fields] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(fields))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(line, widths)).rstrip() for line in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    if summary:
        lines.append(summary)
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _timing(args) -> TimingModel:
    try:
        return TimingModel(args.th, args.tc)
    except DomainError as e:
        raise UsageError(str(e)) from None


def _config(args) -> SchemeConfig:
    return SchemeConfig(Scheme.parse(args.scheme), args.n)


def run_simulate(args) -> int:
    config = _config(args)
    timing = _timing(args)
    if args.message is None:
        check_feasible(config, Method.ROUND_TRIP)
        messages = range(config.capacity)
    else:
        if not 0 <= args.message < config.capacity:
            raise UsageError(
                f"--message {args.message} out of range [0, {config.capacity}) "
                f"for {config.scheme.value} n={config.n}"
            )
        config.check_register()
        messages = [args.message]

    initial = prepare_initial_state(config)
    rows = []
    for m in messages:
        decoded, ledger = decode(config, encode(config, initial, m))
        rows.append(_clean({
            "message": m,
            "decoded": decoded,
            "ok": decoded == m,
            "hadamard_count": ledger.hadamard_count,
            "cnot_count": ledger.cnot_count,
            "decoding_time": decoding_time(config, ledger, timing),
        }))
    passed = sum(r["ok"] for r in rows)
    doc = {
        "scheme": config.scheme.value,
        "n": config.n,
        "t_h": _num(timing.t_h),
        "t_c": _num(timing.t_c),
        "passed": passed,
        "total": len(rows),
        "messages": rows,
    }
    summary = f"{passed}/{len(rows)} pass"
    _emit(render(doc, rows, SIMULATE_FIELDS, args.format, summary), args.output)
    return EXIT_OK if passed == len(rows) else EXIT_FAILED


def run_verify(args) -> int:
    config = _config(args)
    report = capacity(config, args.method, args.tol)
    ok = report.bits == config.bits
    row = _clean({
        "scheme": config.scheme.value,
        "n": config.n,
        "method": report.method.value,
        "message_count": report.message_count,
        "bits": _bits(report.bits),
        "expected_bits": config.bits,
        "max_off_diagonal": report.max_off_diagonal,
        "ok": ok,
    })
    _emit(render(row, [row], VERIFY_FIELDS, args.format), args.output)
    return EXIT_OK if ok else EXIT_FAILED


def run_rates(args) -> int:
    if args.n_min > args.n_max:
        raise UsageError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    timing = _timing(args)
    pairs = compare_schemes(args.n_min, args.n_max, timing, args.capacity_source)
    wanted = [Scheme.parse(args.scheme)] if args.scheme else list(Scheme)
    rows = []
    for scheme in wanted:
        for pair in pairs:
            r = next(rep for rep in pair if rep.scheme is scheme)
            rows.append(_clean({
                "scheme": r.scheme.value,
                "N": r.n,
                "bits": _bits(r.bits),
                "particles": r.particles_sent,
                "total_time": r.total_time,
                "rate_eq1": r.rate_per_time,
                "rate_eq2": r.rate_per_time_per_particle,
                "erroneous_rate": r.erroneous_rate_per_time,
            }))
    _emit(render(rows, rows, RATES_FIELDS, args.format), args.output)
    return EXIT_OK


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="densecoding",
        description="Multiqubit dense coding: simulate, verify capacity, tabulate rates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--th", type=_positive_float, default=1.0, help="Hadamard time (default 1.0)")
    common.add_argument("--tc", type=_positive_float, default=1.0, help="CNOT time (default 1.0)")
    common.add_argument("--format", choices=["json", "csv", "table"], default="table")
    common.add_argument("--output", "-o", default=None, help="write report here instead of stdout")
    common.add_argument("--seed", type=int, default=None, help="accepted and ignored; runs are deterministic")

    schemes = [s.value for s in Scheme]

    p = sub.add_parser("simulate", parents=[common], help="encode/decode round trips")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--message", type=_non_negative_int, default=None,
                   help="single message; all messages when omitted")
    p.set_defaults(func=run_simulate)

    p = sub.add_parser("verify", parents=[common], help="brute-force capacity certificate")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.GRAM.value)
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("rates", parents=[common], help="rate table over a range of N")
    p.add_argument("--scheme", choices=schemes, default=None, help="restrict to one scheme")
    p.add_argument("--n-min", type=_positive_int, default=1)
    p.add_argument("--n-max", type=_positive_int, default=10)
    p.add_argument("--capacity-source", choices=[c.value for c in CapacitySource],
                   default=CapacitySource.FORMULA.value)
    p.set_defaults(func=run_rates)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CapacityLimitError as e:
        print(f"densecoding: capacity limit: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"densecoding: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        print(f"densecoding: verification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except DomainError as e:
        print(f"densecoding: error: {e}", file=sys.stderr)
        return EXIT_USAGE
