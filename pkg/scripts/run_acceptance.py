"""Run the acceptance suite and show its per-criterion PASS/FAIL lines."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import pytest


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-k", default=None, help="pytest keyword filter, e.g. 'criterion_03'")
    args = ap.parse_args(argv)
    target = Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"
    opts = [str(target), "-q", "-s"]
    if args.k:
        opts += ["-k", args.k]
    return int(pytest.main(opts))


if __name__ == "__main__":
    sys.exit(main())
