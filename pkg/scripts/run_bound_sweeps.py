#!/usr/bin/env python3
"""Run every named bound check over its default range and print a summary.

Exits nonzero if any row fails. Rows whose precondition is unmet (below a
stated validity threshold) are counted separately, not as failures.
"""
from __future__ import annotations

import argparse
import sys
import time

from sptorsion.bounds import CHECK_NAMES, default_range, run_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--only", nargs="*", metavar="NAME",
        help="restrict to these check names (default: all with a default range)",
    )
    args = parser.parse_args()

    names = args.only if args.only else sorted(CHECK_NAMES)
    bad = [n for n in names if n not in CHECK_NAMES]
    if bad:
        print(f"unknown checks: {', '.join(bad)}", file=sys.stderr)
        return 2

    any_failed = False
    for name in names:
        span = default_range(name)
        if span is None:
            print(f"{name:16s} skipped (no default range)")
            continue
        lo, hi = span
        t0 = time.monotonic()
        rows = failures = unmet = 0
        for report in run_check(name, lo, hi):
            rows += 1
            if report.passed is None:
                unmet += 1
            elif not report.passed:
                failures += 1
        elapsed = time.monotonic() - t0
        verdict = "ok" if failures == 0 else "FAILED"
        print(
            f"{name:16s} [{lo}..{hi}]  rows={rows}  failures={failures}"
            f"  unmet={unmet}  {elapsed:7.2f}s  {verdict}"
        )
        any_failed = any_failed or failures > 0
    return 1 if any_failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
