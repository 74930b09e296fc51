#!/usr/bin/env python3
"""Run verification suites and print a timing table.

Usage: python scripts/run_suites.py [--suite NAME] [--seed N]
"""

import argparse
import sys

from artinpar import suites


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", default="all", choices=suites.SUITE_NAMES)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    results = suites.run_suite(args.suite, args.seed)
    width = max(len(r.name) for r in results)
    total_failed = 0
    for r in results:
        total_failed += r.failed
        print(
            f"{r.name:<{width}}  {r.passed:>6} passed  {r.failed:>3} failed  "
            f"{r.elapsed:>6.1f}s  {'ok' if r.ok else 'FAILED'}"
        )
        for message in r.failures:
            print(f"{'':<{width}}  - {message}")
    return 1 if total_failed else 0


if __name__ == "__main__":
    sys.exit(main())
