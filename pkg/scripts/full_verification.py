#!/usr/bin/env python3
"""Run every check over a prime range and write a JSON report.

The default range reproduces the headline verification: every congruence
family checked for all primes up to 2000, bit-exactly, in one sweep.

    python scripts/full_verification.py --pmax 2000 --jobs 4 --out report.json
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wilsonq.harness import CHECK_TAGS, RunConfig, run_and_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmin", type=int, default=7)
    parser.add_argument("--pmax", type=int, default=2000)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", default="verification_report.json")
    args = parser.parse_args()

    cfg = RunConfig(
        pmin=args.pmin, pmax=args.pmax, checks=CHECK_TAGS,
        jobs=args.jobs, fmt="json", out=args.out,
    )
    started = time.perf_counter()
    status = run_and_report(cfg)
    print(f"report written to {args.out} in {time.perf_counter() - started:.1f}s")
    return status


if __name__ == "__main__":
    sys.exit(main())
