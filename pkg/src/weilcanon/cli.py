"""Command-line front end for the verification suites.

Exit status: 0 when every check passes, 1 when any check fails, 2 on a
configuration error.  Reports are byte-stable for a fixed (config, seed,
version); wall-clock duration is only included when --timing is given,
since it would break byte-stability.
"""

from __future__ import annotations

import argparse
import sys
import time

from .suites import (SUITE_NAMES, ConfigError, SuiteConfig, emit_report,
                     run_suite)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilcanon",
        description="Run exact verification suites for the canonical "
                    "intertwining kernels and the Weil representation "
                    "over F_p.")
    parser.add_argument("--p", type=int, default=3,
                        help="odd prime (default 3)")
    parser.add_argument("--n", type=int, default=1,
                        help="half-dimension of the symplectic space "
                             "(default 1)")
    parser.add_argument("--suite", default="all",
                        help="suite name or 'all' (choices: %s)"
                             % ", ".join(SUITE_NAMES))
    parser.add_argument("--samples", type=int, default=100,
                        help="echoed in the report; workloads are baked "
                             "per (p, n) and not user-tunable")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for all sampled checks (default 0)")
    parser.add_argument("--out", default=None,
                        help="output path (default stdout)")
    parser.add_argument("--format", default="json",
                        choices=["json", "csv"],
                        help="report format (default json)")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock duration in the report "
                             "(breaks byte-stability)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = SuiteConfig(p=args.p, n=args.n, suite=args.suite,
                             samples=args.samples, seed=args.seed,
                             out=args.out, format=args.format)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    start = time.monotonic()
    report = run_suite(config)
    if args.timing:
        report.duration_seconds = time.monotonic() - start

    text = emit_report(report)
    if config.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(config.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return 2
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
