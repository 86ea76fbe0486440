#!/usr/bin/env python3
"""Run the full verification battery for one or more base groups.

Usage:
    python3 scripts/run_verification.py [--group NAME ...] [--level L]
        [--order N] [--cap K]

Each group runs every suite through the command-line driver; results
are printed as JSON on stdout and timings on stderr.  Exit status is
nonzero if any suite fails.
"""

import argparse
import sys

from classalg.cli import run


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", action="append", default=None)
    ap.add_argument("--level", type=int, default=3)
    ap.add_argument("--order", type=int, default=4)
    ap.add_argument("--cap", type=int, default=2)
    args = ap.parse_args()
    groups = args.group or ["trivial", "cyclic2"]
    worst = 0
    for name in groups:
        print(f"# group {name}", file=sys.stderr)
        code = run(
            [
                "all",
                "--group",
                name,
                "--level",
                str(args.level),
                "--order",
                str(args.order),
                "--cap",
                str(args.cap),
            ]
        )
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
