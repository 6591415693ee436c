"""Canonical labelling by colour refinement and individualisation.

The search tree follows the usual individualisation-refinement scheme: refine
to an equitable ordered partition, individualise each vertex of the first
non-singleton cell, recurse. Leaves are compared by their relabelled adjacency
rows and the smallest wins. Automorphisms discovered at leaves prune sibling
branches in the same orbit, and a leaf equivalent to the first leaf backs the
search up to the point where the two paths diverge.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .graph import Graph, relabel, to_graph6


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            for x in range(len(cells)):
                cell = cells[x]
                if len(cell) == 1:
                    continue
                counts = [(rows[v] & wmask).bit_count() for v in cell]
                c0 = counts[0]
                if all(c == c0 for c in counts):
                    continue
                groups: dict[int, list[int]] = {}
                for v, c in zip(cell, counts):
                    groups.setdefault(c, []).append(v)
                cells[x:x + 1] = [groups[c] for c in sorted(groups)]
                changed = True
                break
            if changed:
                break
    return cells


def _certificate(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        r = rows[v]
        m = 0
        while r:
            low = r & -r
            m |= 1 << pos[low.bit_length() - 1]
            r ^= low
        cert.append(m)
    return tuple(cert)


class _Search:
    def __init__(self, rows: Sequence[int]):
        self.rows = rows
        self.n = len(rows)
        self.first_order: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.first_path: list[int] = []
        self.best_order: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None
        self.autos: list[list[int]] = []

    def _perm(self, src: Sequence[int], dst: Sequence[int]) -> list[int]:
        p = [0] * self.n
        for a, b in zip(src, dst):
            p[a] = b
        return p

    def _orbit_roots(self, path: Sequence[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if any(g[v] != v for v in path):
                continue
            for v in range(self.n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def visit(self, cells: list[list[int]], path: list[int]) -> int | None:
        cells = _refine(self.rows, cells)
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            cert = _certificate(self.rows, order)
            if self.first_cert is None:
                self.first_order = self.best_order = order
                self.first_cert = self.best_cert = cert
                self.first_path = list(path)
                return None
            if cert == self.first_cert:
                self.autos.append(self._perm(self.first_order, order))
                k = 0
                while k < len(path) and k < len(self.first_path) and path[k] == self.first_path[k]:
                    k += 1
                return k
            if cert < self.best_cert:
                self.best_cert, self.best_order = cert, order
            elif cert == self.best_cert:
                self.autos.append(self._perm(self.best_order, order))
            return None
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = sorted(cells[idx])
        depth = len(path)
        tried: list[int] = []
        for v in target:
            if tried:
                roots = self._orbit_roots(path)
                if any(roots[v] == roots[t] for t in tried):
                    continue
            tried.append(v)
            rest = [u for u in cells[idx] if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            res = self.visit(child, path + [v])
            if res is not None and res < depth:
                return res
        return None


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling is the canonical representative of ``g``."""
    if g.n == 0:
        return []
    s = _Search(g.rows)
    s.visit([list(range(g.n))], [])
    assert s.best_order is not None
    return s.best_order


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant label: graph6 of the canonically relabelled graph."""
    return to_graph6(relabel(g, canonical_order(g))).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def canonical_form_bruteforce(g: Graph) -> bytes:
    """Minimum relabelled adjacency over all ``n!`` orders; test oracle, n <= 8."""
    if g.n > 8:
        raise ValueError("brute-force canonical form is limited to 8 vertices")
    best = None
    best_order: tuple[int, ...] = ()
    for order in permutations(range(g.n)):
        cert = _certificate(g.rows, order)
        if best is None or cert < best:
            best, best_order = cert, order
    return to_graph6(relabel(g, best_order)).encode("ascii")
