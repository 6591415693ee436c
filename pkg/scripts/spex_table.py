"""spex and ex for a few forbidden families next to the book lower bound and
the quadratic upper bound."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from minorspex.constructions import named
from minorspex.invariants import FamilySpec, alpha_family, gamma_family
from minorspex.search import SearchQuery, ex_search, spex_search
from minorspex.spectral import book_rho, quadratic_upper_bound_check

DEFAULT_FAMILIES = (("K4",), ("K2,3", "K4"), ("W5",), ("K5",), ("K3,3",), ("F3,3",))


@dataclass(frozen=True)
class TableConfig:
    n_min: int = 4
    n_max: int = 8
    families: tuple[tuple[str, ...], ...] = DEFAULT_FAMILIES


def rows(cfg: TableConfig):
    for names in cfg.families:
        fam = FamilySpec.of([named(s) for s in names])
        g, a = gamma_family(fam), alpha_family(fam)
        for n in range(max(cfg.n_min, g + 1), cfg.n_max + 1):
            sp = spex_search(SearchQuery(n, fam))
            ex = ex_search(SearchQuery(n, fam, mode="ex"))
            upper = quadratic_upper_bound_check(sp.value, g, a, n)
            yield "+".join(names), n, sp.value, book_rho(g, n), upper.satisfied, ex.value, len(sp.extremal), sp.total_minor_free


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=8)
    args = ap.parse_args(argv)
    print(f"{'family':<10} {'n':>3} {'spex':>12} {'book_rho':>12} {'upper ok':>8} {'ex':>4} {'#SPEX':>5} {'#free':>7}")
    for fam, n, spex, lower, ok, ex, k, total in rows(TableConfig(args.n_min, args.n_max)):
        print(f"{fam:<10} {n:>3} {spex:>12.9f} {lower:>12.9f} {str(ok):>8} {ex:>4} {k:>5} {total:>7}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
