"""Named graph families: books, wheels, flowers, star forests and the
extremal candidates for complete multipartite minors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .canon import canonical_form
from .graph import (
    CapacityError,
    Graph,
    GraphError,
    MAX_VERTICES,
    complement,
    disjoint_union,
    join,
    subdivide_edge,
)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph.empty(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def book(gamma: int, t: int) -> Graph:
    """B_{gamma,t}: clique on ``0..gamma-1`` joined to ``t`` independent vertices."""
    if gamma < 0 or t < 0:
        raise GraphError("book sizes must be nonnegative")
    if gamma + t > MAX_VERTICES:
        raise CapacityError(f"book has {gamma + t} vertices")
    return join(complete(gamma), empty(t))


def book_with_matching(s: int, t: int, k: int) -> Graph:
    """B^k_{s,t}: the book plus ``k`` disjoint edges inside its independent set."""
    if 2 * k > t:
        raise GraphError(f"cannot place {k} disjoint edges among {t} vertices")
    g = book(s, t)
    edges = g.edges() + [(s + 2 * i, s + 2 * i + 1) for i in range(k)]
    return Graph.from_edges(g.n, edges)


@dataclass(frozen=True)
class MultipartiteSpec:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(p < 1 for p in self.parts):
            raise GraphError("part sizes must be positive")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise GraphError("part sizes must be nonincreasing")

    @classmethod
    def of(cls, *parts: int) -> MultipartiteSpec:
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def s1(self) -> int:
        return self.parts[0]

    @property
    def s2(self) -> int:
        return self.parts[1] if len(self.parts) > 1 else 0

    @property
    def gamma(self) -> int:
        """|H| - alpha_H - 1 for the complete multipartite graph."""
        return sum(self.parts[1:]) - 1


def complete_multipartite(spec: MultipartiteSpec | Sequence[int]) -> Graph:
    parts = spec.parts if isinstance(spec, MultipartiteSpec) else tuple(spec)
    n = sum(parts)
    if n > MAX_VERTICES:
        raise CapacityError(f"multipartite graph has {n} vertices")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


@dataclass(frozen=True)
class BlockParams:
    gamma: int
    beta: int
    beta0: int
    p: int
    q: int

    @classmethod
    def compute(cls, n: int, spec: MultipartiteSpec) -> BlockParams:
        s1, s2 = spec.s1, spec.s2
        if s2 < 1:
            raise GraphError("need at least two parts")
        gamma = spec.gamma
        beta = (s1 + 1) // (s2 + 1)
        beta0 = s1 + 1 - beta * (s2 + 1)
        rest = n - gamma
        if rest < 1:
            raise GraphError(f"n={n} leaves no vertices outside the {gamma}-clique")
        p, q = divmod(rest - 1, s1)
        return cls(gamma, beta, beta0, p, q + 1)


def star_forest(s1: int, s2: int) -> Graph:
    """H_{s1,s2} = (beta-1) K_{1,s2} u K_{1,s2+beta0}, each star centre first."""
    if not s1 >= s2 >= 1:
        raise GraphError("star_forest needs s1 >= s2 >= 1")
    beta = (s1 + 1) // (s2 + 1)
    beta0 = s1 + 1 - beta * (s2 + 1)
    stars = [star(s2)] * (beta - 1) + [star(s2 + beta0)]
    g = disjoint_union(stars)
    assert g.n == s1 + 1
    return g


def complement_star_forest(s1: int, s2: int) -> Graph:
    return complement(star_forest(s1, s2))


def min_degree_sum_edge(g: Graph) -> tuple[int, int]:
    """Edge ``uv`` minimising d(u)+d(v); ties go to the least ``(u, v)``."""
    edges = g.edges()
    if not edges:
        raise GraphError("graph has no edges")
    deg = g.degrees()
    return min(edges, key=lambda e: (deg[e[0]] + deg[e[1]], e))


def subdivide_min_degree_sum_edge(g: Graph, edge: tuple[int, int] | None = None) -> Graph:
    """S(g): subdivide ``edge`` once, or the min-degree-sum edge when omitted."""
    u, v = edge if edge is not None else min_degree_sum_edge(g)
    return subdivide_edge(g, u, v, 1)


def subdivided_complement_star_forest(s1: int, s2: int, edge: tuple[int, int] | None = None) -> Graph:
    co = complement_star_forest(s1, s2)
    if co.m == 0:
        raise GraphError("complement of the star forest has no edges")
    return subdivide_min_degree_sum_edge(co, edge)


def subdivided_clique(t: int, ell: int) -> Graph:
    """S^ell(K_t): subdivide edge 01 of K_t ``ell`` times."""
    if ell == 0:
        return complete(t)
    if t < 2:
        raise GraphError("K_t needs an edge to subdivide")
    return subdivide_edge(complete(t), 0, 1, ell)


def wheel(k: int) -> Graph:
    """W_{k+1} = K_1 join C_k, hub 0."""
    return join(complete(1), cycle(k))


def flower(lengths: Sequence[int]) -> Graph:
    """Cycles of the given lengths sharing vertex 0."""
    if not lengths or any(s < 3 for s in lengths):
        raise GraphError("flower cycles need length >= 3")
    edges = []
    nxt = 1
    for s in lengths:
        chain = [0] + list(range(nxt, nxt + s - 1)) + [0]
        edges.extend(zip(chain, chain[1:]))
        nxt += s - 1
    return Graph.from_edges(nxt, edges)


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    return Graph.from_edges(
        10, [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    )


def copies(g: Graph, k: int) -> list[Graph]:
    return [g] * k


def g_triangle(n: int, spec: MultipartiteSpec) -> Graph:
    """The (n - gamma)-vertex graph joined to K_gamma in the extremal graph for
    excluding K_{s1,...,sr}; selected by the (q, beta, s1) case table."""
    bp = BlockParams.compute(n, spec)
    s1, s2 = spec.s1, spec.s2
    if bp.gamma < 1:
        raise GraphError("gamma = s2 + ... + sr - 1 must be at least 1")
    if n - bp.gamma < s1:
        raise GraphError(f"n - gamma = {n - bp.gamma} is below s1 = {s1}")
    p, q, beta = bp.p, bp.q, bp.beta
    ks = complete(s1)
    if (q, beta) == (2, 2):
        parts = copies(ks, p - 1) + [subdivided_complement_star_forest(s1, s2)]
    elif (q, beta, s1) == (2, 1, 8):
        parts = copies(ks, p - 1) + [complement(petersen())]
    elif q <= 2 * (beta - 1):
        if p < q:
            raise GraphError(f"case (p-q) K_s1 u q coH needs p >= q (p={p}, q={q})")
        parts = copies(ks, p - q) + copies(complement_star_forest(s1, s2), q)
    else:
        parts = copies(ks, p) + [complete(q)]
    g = disjoint_union(parts)
    if g.n != n - bp.gamma:
        raise GraphError("case arithmetic produced the wrong order")
    return g


def g_triangle_even(n: int, s1: int, gamma: int) -> Graph:
    """The graph joined to K_gamma when excluding B_{r-1,s1} with s1 even."""
    rest = n - gamma
    if s1 % 2 or rest < s1:
        raise GraphError("needs even s1 and n - gamma >= s1")
    p, q = divmod(rest - 1, s1)
    q += 1
    ks = complete(s1)
    if (q, s1) == (2, 4):
        parts = copies(ks, p - 1) + [subdivided_complement_star_forest(s1, 1)]
    elif q <= s1 - 2:
        if p < q:
            raise GraphError(f"needs p >= q (p={p}, q={q})")
        parts = copies(ks, p - q) + copies(complement_star_forest(s1, 1), q)
    else:
        parts = copies(ks, p) + [complete(q)]
    return disjoint_union(parts)


def _partitions(total: int, sizes: Sequence[int], start: int = 0) -> Iterator[list[int]]:
    """Multisets of ``sizes`` (nondecreasing index order) summing to ``total``."""
    if total == 0:
        yield []
        return
    for i in range(start, len(sizes)):
        if sizes[i] <= total:
            for rest in _partitions(total - sizes[i], sizes, i):
                yield [i] + rest


def g_down_members(n: int, s1: int, gamma: int, limit: int | None = None) -> Iterator[Graph]:
    """(n - gamma)-vertex (s1-1)-regular K_{s1,1}-minor-free graphs, s1 odd.

    Components are cycles when ``s1 == 3`` and K_{s1} or the complement of
    H_{s1,1} when ``s1 >= 5``. Members are emitted in lexicographic order of
    their component multisets, at most ``limit`` of them.
    """
    if s1 % 2 == 0:
        raise GraphError("s1 must be odd")
    rest = n - gamma
    if s1 == 1:
        pieces = [complete(1)]
    elif s1 == 3:
        pieces = [cycle(k) for k in range(3, rest + 1)]
    else:
        pieces = [complete(s1), complement_star_forest(s1, 1)]
    sizes = [p.n for p in pieces]
    found = False
    emitted = 0
    seen: set[bytes] = set()
    for combo in _partitions(rest, sizes):
        g = disjoint_union([pieces[i] for i in combo])
        label = canonical_form(g)
        if label in seen:
            continue
        seen.add(label)
        found = True
        yield g
        emitted += 1
        if limit is not None and emitted >= limit:
            return
    if not found:
        raise GraphError(f"no ({s1 - 1})-regular member of order {rest}")


def named(name: str) -> Graph:
    """Small fixtures used by the CLI and tests, e.g. ``K5``, ``K3,3``, ``W5``, ``C7``, ``P4``."""
    s = name.strip()
    if s.lower() == "petersen":
        return petersen()
    m = re.fullmatch(r"K(\d+(?:,\d+)+)", s)
    if m:
        return complete_multipartite(MultipartiteSpec.of(*map(int, m.group(1).split(","))))
    m = re.fullmatch(r"([KCPWE])(\d+)", s)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "K":
            return complete(k)
        if kind == "C":
            return cycle(k)
        if kind == "P":
            return path(k)
        if kind == "E":
            return empty(k)
        return wheel(k - 1)
    m = re.fullmatch(r"F(\d+(?:,\d+)*)", s)
    if m:
        return flower([int(x) for x in m.group(1).split(",")])
    raise GraphError(f"unknown graph name {name!r}")
