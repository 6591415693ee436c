"""Isomorph-free generation of minor-free graphs and the extremal searches."""

from __future__ import annotations

import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

import numpy as np

from .canon import canonical_form, canonical_order
from .graph import CapacityError, Graph, GraphError, cut_vertices, delete_vertex, disjoint_union, is_connected, to_graph6
from .invariants import FamilySpec, as_members, gamma_family, is_connected_family
from .minor import contains_family_minor_using, is_family_minor_free, is_saturated
from .spectral import (
    COMPARE_EPS,
    EXACT_RECHECK_GAP,
    book_rho,
    compare_rho_exact,
    spectral_radius,
)

log = logging.getLogger(__name__)

MODES = ("spex", "ex", "sat-list", "spex-connected", "ex-connected")
FEASIBLE_N = 12
WORKERS_ENV = "MINORSPEX_WORKERS"


class SearchInvariantError(AssertionError):
    """A law that every search result must satisfy was violated."""


# ---------------------------------------------------------------- generation


def _add_vertex(p: Graph, nbrs: int) -> Graph:
    k = p.n
    rows = list(p.rows)
    for u in range(k):
        if (nbrs >> u) & 1:
            rows[u] |= 1 << k
    rows.append(nbrs)
    return Graph._trusted(k + 1, tuple(rows))


def _invariant(g: Graph, v: int, deg: Sequence[int]) -> tuple:
    r = g.rows[v]
    return deg[v], tuple(sorted(deg[u] for u in range(g.n) if (r >> u) & 1))


class _Augmenter:
    """Children of a parent under canonical vertex deletion.

    The deleted vertex is an eligible vertex (non-cut in connected mode)
    minimising (degree, sorted neighbour degrees), ties broken by the
    largest canonical position.
    """

    def __init__(self, members: Sequence[Graph], connected: bool):
        self.members = tuple(sorted(members, key=lambda h: (h.n, h.m)))
        self.connected = connected

    def children(self, parent: Graph) -> list[Graph]:
        k = parent.n
        parent_label = canonical_form(parent)
        pdeg = parent.degrees()
        if k == 0:
            return [Graph.empty(1)]
        if self.connected:
            cut = cut_vertices(parent) if k > 2 else 0
            noncut = [u for u in range(k) if not (cut >> u) & 1]
            cap = max(1, min(pdeg[u] for u in noncut) + 1)
            lo = 1
        else:
            cap = min(pdeg) + 1
            lo = 0
        cap = min(cap, k)
        violators: list[int] = []
        found: dict[bytes, Graph] = {}
        for size in range(lo, cap + 1):
            for combo in combinations(range(k), size):
                s = 0
                for u in combo:
                    s |= 1 << u
                if any(t & s == t for t in violators):
                    continue
                child = _add_vertex(parent, s)
                v = k
                deg = child.degrees()
                if self.connected:
                    cutc = cut_vertices(child)
                    eligible = [u for u in range(k + 1) if not (cutc >> u) & 1]
                else:
                    eligible = list(range(k + 1))
                mine = _invariant(child, v, deg)
                # cheap rejection before any invariant tuples are built
                if any(deg[u] < deg[v] for u in eligible):
                    continue
                ties = []
                reject = False
                for u in eligible:
                    if deg[u] != deg[v]:
                        continue
                    inv = _invariant(child, u, deg)
                    if inv < mine:
                        reject = True
                        break
                    if inv == mine:
                        ties.append(u)
                if reject:
                    continue
                if self.members and contains_family_minor_using(child, self.members, v):
                    violators.append(s)
                    continue
                if len(ties) > 1:
                    order = canonical_order(child)
                    pos = {u: i for i, u in enumerate(order)}
                    w = max(ties, key=lambda u: pos[u])
                    if w != v and canonical_form(delete_vertex(child, w)) != parent_label:
                        continue
                label = canonical_form(child)
                found.setdefault(label, child)
        return [found[key] for key in sorted(found)]


def _children_job(args: tuple[tuple[Graph, ...], bool, Graph]) -> list[Graph]:
    members, connected, parent = args
    return _Augmenter(members, connected).children(parent)


def worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


class MinorFreeCatalog:
    """Levels of isomorph-free minor-free graphs, built bottom-up and cached."""

    def __init__(self, family: FamilySpec | Iterable[Graph], connected: bool, workers: int | None = None):
        self.members = tuple(as_members(family))
        self.connected = connected
        self.workers = worker_count(workers)
        self.levels: list[list[Graph]] = [[Graph.empty(0)]]
        self._aug = _Augmenter(self.members, connected)

    def level(self, k: int) -> list[Graph]:
        while len(self.levels) <= k:
            parents = self.levels[-1]
            self.levels.append(self._expand(parents))
        return self.levels[k]

    def _expand(self, parents: list[Graph]) -> list[Graph]:
        if self.workers > 1 and len(parents) >= 64:
            jobs = [(self.members, self.connected, p) for p in parents]
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                batches = list(pool.map(_children_job, jobs, chunksize=max(1, len(jobs) // (8 * self.workers))))
        else:
            batches = [self._aug.children(p) for p in parents]
        out = [g for batch in batches for g in batch]
        out.sort(key=canonical_form)
        return out


def _estimate_next(counts: Sequence[int]) -> int:
    if len(counts) < 2 or counts[-2] == 0:
        return counts[-1] if counts else 1
    return int(counts[-1] * counts[-1] / counts[-2])


def _check_capacity(n: int, force: bool) -> None:
    if n < 1:
        raise GraphError("order must be at least 1")
    if n > FEASIBLE_N and not force:
        raise CapacityError(f"n={n} exceeds the feasibility cap {FEASIBLE_N}; pass force to override")


def _multisets(levels: Sequence[Sequence[Graph]], n: int) -> Iterator[Graph]:
    """Disjoint unions of connected pieces whose orders sum to ``n``."""

    def parts(total: int, largest: int) -> Iterator[list[int]]:
        if total == 0:
            yield []
            return
        for k in range(min(total, largest), 0, -1):
            for rest in parts(total - k, k):
                yield [k] + rest

    for sizes in parts(n, n):
        counts = Counter(sizes)
        choices = [list(combinations_with_replacement(range(len(levels[k])), c)) for k, c in sorted(counts.items(), reverse=True)]
        keys = sorted(counts.items(), reverse=True)

        def rec(i: int, acc: list[Graph]) -> Iterator[Graph]:
            if i == len(keys):
                yield disjoint_union(acc)
                return
            k = keys[i][0]
            for pick in choices[i]:
                yield from rec(i + 1, acc + [levels[k][j] for j in pick])

        yield from rec(0, [])


def enumerate_minor_free(
    n: int,
    family: FamilySpec | Iterable[Graph],
    connected_only: bool = False,
    workers: int | None = None,
    force: bool = False,
) -> Iterator[Graph]:
    """One graph per isomorphism class of ``n``-vertex family-minor-free graphs."""
    _check_capacity(n, force)
    members = as_members(family)
    if members and is_connected_family(members) and not connected_only:
        # free iff every component is free
        cat = MinorFreeCatalog(members, connected=True, workers=workers)
        if n > FEASIBLE_N:
            log.warning("estimated connected graphs at order %d: %d", n, _estimate_next([len(cat.level(k)) for k in range(1, n)]))
        levels = [cat.level(k) for k in range(n + 1)]
        yield from _multisets(levels, n)
        return
    cat = MinorFreeCatalog(members, connected=connected_only, workers=workers)
    if n > FEASIBLE_N:
        log.warning("estimated graphs at order %d: %d", n, _estimate_next([len(cat.level(k)) for k in range(1, n)]))
    yield from cat.level(n)


def enumerate_all_graphs(n: int, connected_only: bool = False) -> list[Graph]:
    """Unrestricted isomorph-free catalog; the reference for completeness checks."""
    _check_capacity(n, False)
    return MinorFreeCatalog((), connected=connected_only, workers=1).level(n)


# ---------------------------------------------------------------- queries and reports


@dataclass(frozen=True)
class SearchQuery:
    n: int
    family: FamilySpec
    mode: str = "spex"
    epsilon: float = COMPARE_EPS
    force: bool = False

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        _check_capacity(self.n, self.force)

    @property
    def connected(self) -> bool:
        return self.mode.endswith("-connected")

    def echo(self) -> dict:
        return {
            "n": self.n,
            "family": [to_graph6(h) for h in self.family.members],
            "mode": self.mode,
            "epsilon": self.epsilon,
        }


@dataclass
class SearchReport:
    query: dict
    value: float | int | None
    extremal: list[str]
    total_minor_free: int
    predicted: dict | None = None
    elapsed: float = 0.0
    verdict: dict | None = field(default=None)

    def to_dict(self) -> dict:
        out = {
            "query": self.query,
            "value": self.value,
            "extremal": self.extremal,
            "total_minor_free": self.total_minor_free,
            "predicted": self.predicted,
            "elapsed": self.elapsed,
        }
        if self.verdict is not None:
            out["verdict"] = self.verdict
        return out


def _labels(graphs: Iterable[Graph]) -> list[str]:
    return sorted({canonical_form(g).decode("ascii") for g in graphs})


def _post_check(graphs: Iterable[Graph], family: FamilySpec) -> None:
    for g in graphs:
        if not is_family_minor_free(g, family):
            raise SearchInvariantError(f"reported graph {g!r} contains a forbidden minor")


def _batch_rho(graphs: Sequence[Graph]) -> np.ndarray:
    if not graphs:
        return np.zeros(0)
    n = graphs[0].n
    rows = np.array([g.rows for g in graphs], dtype=np.uint64)
    shifts = np.arange(n, dtype=np.uint64)
    adj = ((rows[:, :, None] >> shifts[None, None, :]) & np.uint64(1)).astype(np.float64)
    out = np.empty(len(graphs))
    step = 4096
    for i in range(0, len(graphs), step):
        out[i:i + step] = np.linalg.eigvalsh(adj[i:i + step])[:, -1]
    return out


def _require_star_free(family: FamilySpec) -> None:
    if family.has_star():
        raise GraphError("spectral extremal search needs a star-free family (a member is a star)")


def spex_search(q: SearchQuery, workers: int | None = None) -> SearchReport:
    if not q.mode.startswith("spex"):
        raise ValueError("spex_search needs mode spex or spex-connected")
    _require_star_free(q.family)
    start = time.perf_counter()
    graphs = list(enumerate_minor_free(q.n, q.family, q.connected, workers=workers, force=q.force))
    if not graphs:
        return SearchReport(q.echo(), None, [], 0, elapsed=time.perf_counter() - start)
    rhos = _batch_rho(graphs)
    top = float(rhos.max())
    near = [i for i in np.flatnonzero(rhos >= top - max(EXACT_RECHECK_GAP, q.epsilon))]
    # exact recheck decides the extremal class
    best = [int(near[0])]
    for i in near[1:]:
        c = compare_rho_exact(graphs[int(i)], graphs[best[0]])
        if c > 0:
            best = [int(i)]
        elif c == 0:
            best.append(int(i))
    extremal = [graphs[i] for i in best]
    value = spectral_radius(extremal[0]).rho
    _post_check(extremal, q.family)
    gamma = gamma_family(q.family)
    if 1 <= gamma < q.n and value < book_rho(gamma, q.n) - 1e-9:
        raise SearchInvariantError(f"spex value {value} is below the book lower bound")
    return SearchReport(q.echo(), value, _labels(extremal), len(graphs), elapsed=time.perf_counter() - start)


def ex_search(q: SearchQuery, workers: int | None = None) -> SearchReport:
    if not q.mode.startswith("ex"):
        raise ValueError("ex_search needs mode ex or ex-connected")
    start = time.perf_counter()
    best = -1
    extremal: list[Graph] = []
    total = 0
    for g in enumerate_minor_free(q.n, q.family, q.connected, workers=workers, force=q.force):
        total += 1
        if g.m > best:
            best, extremal = g.m, [g]
        elif g.m == best:
            extremal.append(g)
    _post_check(extremal, q.family)
    value = best if total else None
    return SearchReport(q.echo(), value, _labels(extremal), total, elapsed=time.perf_counter() - start)


def sat_list(q: SearchQuery, workers: int | None = None) -> SearchReport:
    if q.mode != "sat-list":
        raise ValueError("sat_list needs mode sat-list")
    start = time.perf_counter()
    sat = []
    total = 0
    for g in enumerate_minor_free(q.n, q.family, False, workers=workers, force=q.force):
        total += 1
        if is_saturated(g, q.family):
            sat.append(g)
    return SearchReport(q.echo(), len(sat), _labels(sat), total, elapsed=time.perf_counter() - start)


def run_query(q: SearchQuery, workers: int | None = None) -> SearchReport:
    if q.mode.startswith("spex"):
        return spex_search(q, workers)
    if q.mode.startswith("ex"):
        return ex_search(q, workers)
    return sat_list(q, workers)
