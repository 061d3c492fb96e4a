#!/usr/bin/env python3
"""Sweep code lengths for dual-containing cyclic codes near the Reiger bound."""

import argparse
import sys

from qburst.searchcli import SearchJob, report_emit, search


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=30)
    parser.add_argument("--field", choices=["gf2", "gf4"], default="gf4")
    parser.add_argument("--delta-max", type=int, default=2)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--format", choices=["json", "csv"], default="csv")
    args = parser.parse_args()
    job = SearchJob(args.n_min, args.n_max, args.field, args.delta_max, args.jobs)
    sys.stdout.buffer.write(report_emit(search(job), args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
