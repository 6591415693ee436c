"""Maximal linear paths and the edge decomposition they induce."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, is_connected


@dataclass(frozen=True)
class LinearPathDecomposition:
    """Maximal linear paths; a closed one repeats its first vertex at the end."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def phi(self) -> int:
        return len(self.paths)


def path_order(p: tuple[int, ...]) -> int:
    return len(set(p))


def is_closed(p: tuple[int, ...]) -> bool:
    return len(p) > 2 and p[0] == p[-1]


def path_edges(p: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(min(a, b), max(a, b)) for a, b in zip(p, p[1:])]


def _canonical_direction(p: list[int], rotate: bool = False) -> tuple[int, ...]:
    fwd = tuple(p)
    if rotate and is_closed(fwd):
        # a whole cycle has no anchor: start at the least vertex, smaller direction
        core = p[:-1]
        i = core.index(min(core))
        rot = core[i:] + core[:i]
        rev = [rot[0]] + rot[1:][::-1]
        best = min(rot, rev)
        return tuple(best + [best[0]])
    return min(fwd, fwd[::-1])


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees())


def maximal_linear_paths(g: Graph) -> LinearPathDecomposition:
    if g.n < 2 or not is_connected(g):
        raise GraphError("needs a connected graph with at least two vertices")
    deg = g.degrees()
    if is_cycle_graph(g):
        walk = [0]
        prev, cur = -1, 0
        while True:
            nxt = min(u for u in g.neighbors(cur) if u != prev) if prev >= 0 else min(g.neighbors(cur))
            walk.append(nxt)
            if nxt == 0:
                break
            prev, cur = cur, nxt
        return LinearPathDecomposition((_canonical_direction(walk, rotate=True),))
    seen: set[frozenset[tuple[int, int]]] = set()
    paths = []
    for u in range(g.n):
        if deg[u] == 2:
            continue
        for v in g.neighbors(u):
            walk = [u, v]
            prev, cur = u, v
            while deg[cur] == 2 and cur != u:
                a, b = g.neighbors(cur)
                nxt = b if a == prev else a
                walk.append(nxt)
                prev, cur = cur, nxt
            key = frozenset(path_edges(tuple(walk)))
            if key in seen:
                continue
            seen.add(key)
            paths.append(_canonical_direction(walk))
    paths.sort(key=lambda p: (path_order(p), p))
    return LinearPathDecomposition(tuple(paths))


def phi_identity_check(g: Graph) -> bool:
    """2 phi equals the degree sum over vertices whose degree is not 2."""
    if is_cycle_graph(g):
        raise GraphError("the identity does not apply to cycles")
    dec = maximal_linear_paths(g)
    return 2 * dec.phi == sum(d for d in g.degrees() if d != 2)


def longest_maximal_linear_path(g: Graph) -> tuple[int, ...]:
    dec = maximal_linear_paths(g)
    return min(dec.paths, key=lambda p: (-path_order(p), p))


def degree_classes(g: Graph) -> tuple[list[int], list[int], list[int]]:
    """Vertices of degree 1, degree 2 and degree at least 3."""
    deg = g.degrees()
    return (
        [v for v in range(g.n) if deg[v] == 1],
        [v for v in range(g.n) if deg[v] == 2],
        [v for v in range(g.n) if deg[v] >= 3],
    )
