#!/usr/bin/env python3
"""Decoder census rows for the small benchmark codes."""

import argparse
import sys

from qburst.galois import GF2, GF4
from qburst.cycliccode import code_from_generator
from qburst.qetd import burst_census
from qburst.searchcli import _stats_row, parse_generator

ROWS = [
    ("hermitian", 5, "(1^2 2^1 1^0)"),
    ("css", 7, "(1^3 1^1 1^0)"),
    ("hermitian", 13, "(1^6 2^5 3^3 2^1 1^0)"),
    ("hermitian", 17, "(1^8 3^7 3^5 3^4 3^3 3^1 1^0)"),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lmax", type=int, default=None)
    args = parser.parse_args()
    for construction, n, gen in ROWS:
        field = GF4 if construction == "hermitian" else GF2
        code = code_from_generator(n, parse_generator(gen, field))
        stats = burst_census(code, construction, lmax=args.lmax)
        print(_stats_row(stats, gen))
    return 0


if __name__ == "__main__":
    sys.exit(main())
