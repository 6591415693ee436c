"""Run the theorem harness over a range of orders and record where the
predicted extremal set first matches the exhaustive search."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from minorspex.theorems import verify_theorem

DEFAULT_CASES = (
    ("thm1.4", {"a": 2}),
    ("thm1.6", {"k": 4}),
    ("thm1.6", {"k": 5}),
    ("thm1.7", {"lengths": (3, 3)}),
    ("thm4.3", {"s1": 3}),
    ("thm4.4", {"s1": 4}),
)


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 5
    n_max: int = 9
    workers: int | None = None
    cases: tuple = field(default=DEFAULT_CASES)


def sweep(cfg: SweepConfig):
    for theorem, params in cfg.cases:
        first_match = None
        for n in range(cfg.n_min, cfg.n_max + 1):
            rep = verify_theorem(theorem, n, workers=cfg.workers, **params)
            match = rep.predicted["matches"] if rep.predicted else None
            if match and first_match is None:
                first_match = n
            yield {
                "theorem": theorem,
                "params": rep.verdict["params"],
                "n": n,
                "value": rep.value,
                "passed": rep.verdict["passed"],
                "set_equality": match,
                "first_match_so_far": first_match,
                "elapsed": round(rep.elapsed, 3),
            }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.n_min, args.n_max, args.workers)
    ok = True
    for row in sweep(cfg):
        print(json.dumps(row), flush=True)
        ok &= row["passed"]
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
