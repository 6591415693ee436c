"""Tabulate the regular quadratic bound on K_gamma join R over every
K_{1,s1}-minor-free R and count where equality holds."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from minorspex.constructions import complete, star
from minorspex.graph import is_regular, join
from minorspex.invariants import FamilySpec
from minorspex.search import enumerate_minor_free
from minorspex.spectral import regular_bound_check, spectral_radius_fast


@dataclass(frozen=True)
class CertifyConfig:
    s1_values: tuple[int, ...] = (3, 4, 5)
    gammas: tuple[int, ...] = (1, 2)
    n_max: int = 12


def certify(cfg: CertifyConfig):
    for s1 in cfg.s1_values:
        fam = FamilySpec.of([star(s1)])
        for gamma in cfg.gammas:
            for n in range(gamma + 1, cfg.n_max + 1):
                total = equal = regular = mismatched = 0
                min_gap = float("inf")
                for r in enumerate_minor_free(n - gamma, fam):
                    rep = regular_bound_check(spectral_radius_fast(join(complete(gamma), r)), s1, gamma, n)
                    reg = is_regular(r, s1 - 1)
                    total += 1
                    equal += rep.equality
                    regular += reg
                    mismatched += rep.equality != reg or not rep.satisfied
                    if not reg:
                        min_gap = min(min_gap, rep.slack)
                yield s1, gamma, n, total, regular, equal, mismatched, min_gap


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args(argv)
    print(f"{'s1':>3} {'g':>2} {'n':>3} {'graphs':>8} {'regular':>8} {'equal':>6} {'bad':>4} {'min slack (irregular)':>22}")
    bad = 0
    for s1, gamma, n, total, regular, equal, mismatched, gap in certify(CertifyConfig(n_max=args.n_max)):
        bad += mismatched
        print(f"{s1:>3} {gamma:>2} {n:>3} {total:>8} {regular:>8} {equal:>6} {mismatched:>4} {gap:>22.3e}")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
