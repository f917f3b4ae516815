#!/usr/bin/env python3
"""Sweep the brute-force oracle against the closed-form counts.

Prints one line per composition; exits nonzero on any mismatch.
"""

import argparse
import sys

from parkseq import verify_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-cars", type=int, default=4)
    parser.add_argument("--max-total", type=int, default=10)
    parser.add_argument("--circular", action="store_true")
    args = parser.parse_args()

    flavor = "circular" if args.circular else "linear"
    reports = verify_sweep(args.max_cars, args.max_total, flavor)
    failures = 0
    for r in reports:
        verdict = "MATCH" if r.match else "MISMATCH"
        print(
            f"sizes={r.sizes.sizes} total={r.total_tuples} "
            f"parked={r.parked} formula={r.formula_value} {verdict}"
        )
        failures += not r.match
    print(f"{len(reports)} compositions, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
