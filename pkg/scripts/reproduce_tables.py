#!/usr/bin/env python3
"""Recompute the bundled table fixtures and print one line per row."""

import argparse
import sys

from qburst.searchcli import verify_tables


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixtures", default=None, help="fixture directory override")
    parser.add_argument("--include-slow", action="store_true")
    args = parser.parse_args()
    lines, unexpected = verify_tables(args.fixtures, include_slow=args.include_slow)
    for line in lines:
        print(line)
    print(f"{unexpected} unexpected discrepancies")
    return 2 if unexpected else 0


if __name__ == "__main__":
    sys.exit(main())
