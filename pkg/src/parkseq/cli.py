"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 valid-input negative result
(failure to park, formula mismatch, failed bijection check), 2 usage
error, 3 enumeration budget refusal.

JSON output is one document per invocation with top-level keys "command",
"sizes", "flavor" plus a command-specific payload. Counts are serialized
as decimal strings so 64-bit-limited JSON readers cannot truncate them.
"""

from __future__ import annotations

import argparse
import json
import sys
from random import Random
from typing import Sequence

from .bruteforce import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    EnumerationReport,
    bijection_checks,
    verify,
    verify_sweep,
)
from .circular import empty_spot, simulate_circular
from .core import (
    Collision,
    Parked,
    PastEnd,
    PrefSequence,
    SizeVector,
    simulate_linear,
)
from .counting import count_circular, count_linear
from .divider import sample_circular, sample_linear

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}")
    return values


def _emit(payload: dict, as_json: bool, human_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for line in human_lines:
            print(line)


def _flavor(args: argparse.Namespace) -> str:
    return "circular" if getattr(args, "circular", False) else "linear"


def cmd_simulate(args: argparse.Namespace) -> int:
    sizes = SizeVector(_parse_int_list(args.sizes, "--sizes"))
    flavor = _flavor(args)
    prefs = PrefSequence(_parse_int_list(args.prefs, "--prefs"), flavor)
    simulate = simulate_circular if flavor == "circular" else simulate_linear
    result = simulate(sizes, prefs)
    payload: dict = {"command": "simulate", "sizes": list(sizes.sizes), "flavor": flavor}
    lines: list[str] = []
    if isinstance(result, Parked):
        layout = result.layout
        records = []
        for car in range(1, sizes.n + 1):
            block = layout.block(car)
            records.append({"car": car, "start": block[0], "end": block[-1]})
        records.sort(key=lambda r: r["start"])
        payload["result"] = "parked"
        payload["layout"] = records
        lines.append("parked")
        for r in records:
            lines.append(f"  C{r['car']} @ {r['start']}-{r['end']}")
        if flavor == "circular":
            e = empty_spot(layout)
            payload["empty_spot"] = e
            lines.append(f"  empty spot: {e}")
        code = EXIT_OK
    elif isinstance(result, Collision):
        payload["result"] = "collision"
        payload["car"] = result.car
        payload["first_empty"] = result.first_empty
        payload["blocked"] = result.blocked
        lines.append(
            f"collision: car {result.car} found spot {result.first_empty} empty "
            f"but spot {result.blocked} is taken"
        )
        code = EXIT_NEGATIVE
    else:
        assert isinstance(result, PastEnd)
        payload["result"] = "past_end"
        payload["car"] = result.car
        lines.append(f"past end: car {result.car} drove past the end of the lot")
        code = EXIT_NEGATIVE
    _emit(payload, args.json, lines)
    return code


def cmd_count(args: argparse.Namespace) -> int:
    sizes = SizeVector(_parse_int_list(args.sizes, "--sizes"))
    flavor = _flavor(args)
    value = count_circular(sizes) if flavor == "circular" else count_linear(sizes)
    payload = {
        "command": "count",
        "sizes": list(sizes.sizes),
        "flavor": flavor,
        "count": str(value),
    }
    _emit(payload, args.json, [str(value)])
    return EXIT_OK


def _report_dict(report: EnumerationReport) -> dict:
    return {
        "sizes": list(report.sizes.sizes),
        "flavor": report.flavor,
        "total_tuples": str(report.total_tuples),
        "parked": str(report.parked),
        "collisions": str(report.collisions),
        "past_end": str(report.past_end),
        "formula": str(report.formula_value),
        "match": report.match,
    }


def _report_line(report: EnumerationReport) -> str:
    verdict = "MATCH" if report.match else "MISMATCH"
    return (
        f"sizes={','.join(map(str, report.sizes.sizes))} ({report.flavor}): "
        f"{report.total_tuples} tuples, {report.parked} parked, "
        f"{report.collisions} collisions, {report.past_end} past-end, "
        f"formula {report.formula_value}, {verdict}"
    )


def cmd_verify(args: argparse.Namespace) -> int:
    flavor = _flavor(args)
    if args.sizes is not None:
        sizes = SizeVector(_parse_int_list(args.sizes, "--sizes"))
        reports = [verify(sizes, flavor, budget=args.budget)]
    elif args.max_cars is not None and args.max_total is not None:
        reports = verify_sweep(args.max_cars, args.max_total, flavor, budget=args.budget)
    else:
        raise ValueError("provide --sizes or both --max-cars and --max-total")
    all_match = all(r.match for r in reports)
    payload = {
        "command": "verify",
        "sizes": [list(r.sizes.sizes) for r in reports],
        "flavor": flavor,
        "reports": [_report_dict(r) for r in reports],
        "all_match": all_match,
    }
    lines = [_report_line(r) for r in reports]
    lines.append("all match" if all_match else "MISMATCH DETECTED")
    _emit(payload, args.json, lines)
    return EXIT_OK if all_match else EXIT_NEGATIVE


def cmd_bijection(args: argparse.Namespace) -> int:
    sizes = SizeVector(_parse_int_list(args.sizes, "--sizes"))
    report = bijection_checks(sizes, budget=args.budget)
    checks = {
        "decode_valid": report.decode_valid,
        "decode_injective": report.decode_injective,
        "image_equals_circular_set": report.image_equals_circular_set,
        "image_count_matches_formula": report.image_count_matches_formula,
        "restriction_matches_linear_set": report.restriction_matches_linear_set,
        "rotation_invariant": report.rotation_invariant,
    }
    payload = {
        "command": "bijection",
        "sizes": list(sizes.sizes),
        "flavor": "circular",
        "option_sequences": str(report.option_sequences),
        "distinct_decodes": str(report.distinct_decodes),
        "circular_parking_sequences": str(report.circular_parking_sequences),
        "linear_parking_sequences": str(report.linear_parking_sequences),
        "checks": checks,
        "all_pass": report.all_pass,
    }
    lines = [
        f"option sequences: {report.option_sequences}",
        f"distinct decodes: {report.distinct_decodes}",
        f"circular parking sequences (brute force): {report.circular_parking_sequences}",
        f"linear parking sequences (brute force): {report.linear_parking_sequences}",
    ]
    for name, ok in checks.items():
        lines.append(f"{name}: {'pass' if ok else 'FAIL'}")
    lines.append("all pass" if report.all_pass else "FAILED")
    _emit(payload, args.json, lines)
    return EXIT_OK if report.all_pass else EXIT_NEGATIVE


def cmd_sample(args: argparse.Namespace) -> int:
    sizes = SizeVector(_parse_int_list(args.sizes, "--sizes"))
    flavor = _flavor(args)
    if args.count < 0:
        raise ValueError("--count must be >= 0")
    rng = Random(args.seed)
    draw = sample_circular if flavor == "circular" else sample_linear
    samples = [draw(sizes, rng) for _ in range(args.count)]
    payload = {
        "command": "sample",
        "sizes": list(sizes.sizes),
        "flavor": flavor,
        "seed": args.seed,
        "count": args.count,
        "samples": [list(s.prefs) for s in samples],
    }
    lines = [",".join(map(str, s.prefs)) for s in samples]
    _emit(payload, args.json, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkseq",
        description="Exact combinatorics of parking sequences for cars of different sizes.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, sizes_required: bool = True) -> None:
        p.add_argument("--sizes", required=sizes_required,
                       help="comma-separated car sizes, e.g. 2,2,1")
        p.add_argument("--circular", action="store_true",
                       help="use the circular lot of T+1 spots")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output (one JSON document)")

    p = sub.add_parser("simulate", help="run the parking rule on one preference tuple")
    common(p)
    p.add_argument("--prefs", required=True,
                   help="comma-separated preferred spots, e.g. 2,3,1")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("count", help="closed-form number of parking sequences")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="brute-force check of the closed form")
    common(p, sizes_required=False)
    p.add_argument("--max-cars", type=int, help="sweep bound on the number of cars")
    p.add_argument("--max-total", type=int, help="sweep bound on the total size")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum tuples per instance (default %(default)s)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection",
                       help="exhaustively check the divider decoder is a bijection")
    common(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum tuples (default %(default)s)")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("sample", help="draw exactly-uniform parking sequences")
    common(p)
    p.add_argument("--count", type=int, required=True, help="number of draws")
    p.add_argument("--seed", type=int, required=True, help="random seed (mandatory)")
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
