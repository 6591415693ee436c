"""Exact minor containment with witness models.

The search assigns a connected branch set to each pattern vertex in turn.
Pruning rules, all sound:

* forward checking: a placed branch set with ``k`` unplaced pattern
  neighbours needs ``k`` free vertices in its neighbourhood;
* a degree-1 pattern vertex whose neighbour is already placed takes a
  single host vertex;
* a pattern vertex whose neighbours are all placed only tries
  inclusion-minimal branch sets;
* twin pattern vertices are placed in nondecreasing order of a key that
  is invariant under host twin swaps;
* host twins (equal open or closed neighbourhoods) are used in id order,
  so their usage is always a prefix of the twin class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .graph import (
    Graph,
    GraphError,
    add_edge,
    bits,
    component_masks,
    induced,
    is_connected,
    is_connected_mask,
    strip_isolated,
)
from .invariants import FamilySpec, as_members, gamma_family, gamma_union_family


@dataclass(frozen=True)
class MinorModel:
    """Branch sets indexed by pattern vertex."""

    host: Graph
    pattern: Graph
    branch_sets: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return sum(len(b) for b in self.branch_sets)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(b)) for b in self.branch_sets)


# ---------------------------------------------------------------- helpers


def _twin_classes(rows: Sequence[int], vertices: Iterable[int]) -> list[list[int]]:
    """Classes of vertices with equal open or equal closed neighbourhoods."""
    classes: list[list[int]] = []
    for v in vertices:
        for cls in classes:
            u = cls[0]
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def connected_sets(rows: Sequence[int], allowed: int, root: int | None = None) -> list[tuple[int, int]]:
    """All connected subsets of ``allowed`` as ``(mask, outer neighbourhood)``.

    With ``root`` given, only the sets containing it. Each set appears once.
    """
    out: list[tuple[int, int]] = []
    roots = [root] if root is not None else bits(allowed)
    region = allowed
    for r in roots:
        rb = 1 << r
        stack = [(rb, rows[r], 0)]
        while stack:
            s, ns, excl = stack.pop()
            cand = ns & region & ~s & ~excl
            if not cand:
                out.append((s, ns & ~s))
                continue
            low = cand & -cand
            v = low.bit_length() - 1
            stack.append((s, ns, excl | low))
            stack.append((s | low, ns | rows[v], excl))
        if root is None:
            region &= ~rb
    return out


class _HostData:
    """Connected branch-set candidates of a host region, shared across searches.

    With symmetry on, host twins are used in id order: every candidate
    meets each twin class in a run of consecutive ids, and ``key`` is the
    least class representative it touches.
    """

    def __init__(self, host: Graph, region: int, symmetry: bool):
        self.rows = host.rows
        self.classes: list[tuple[int, list[int]]] = []
        rep = list(range(host.n))
        if symmetry:
            for cls in _twin_classes(self.rows, bits(region)):
                cls.sort()
                for v in cls:
                    rep[v] = cls[0]
                if len(cls) > 1:
                    prefixes = [0]
                    for v in cls:
                        prefixes.append(prefixes[-1] | (1 << v))
                    self.classes.append((prefixes[-1], prefixes))
        self.rep = rep
        if self.classes:
            raw = self._contiguous_sets(region)
        else:
            raw = [(s, ns, self._key(s) if symmetry else 0) for s, ns in connected_sets(self.rows, region)]
        raw.sort(key=lambda t: (t[0].bit_count(), t[0]))
        self.sets = [(s, s.bit_count(), ns, key) for s, ns, key in raw]
        self._first: dict[int, list] = {}

    def _key(self, s: int) -> int:
        rep = self.rep
        return min(rep[v] for v in bits(s))

    def first_sets(self, must: int) -> list:
        if must not in self._first:
            self._first[must] = [t for t in self.sets if (t[0] >> must) & 1]
        return self._first[must]

    def _contiguous_sets(self, region: int) -> list[tuple[int, int, int]]:
        # connectivity is invariant under twin swaps: enumerate sets whose
        # class parts are prefixes, then slide each part along its class
        rows = self.rows
        pred = [-1] * len(rows)
        runs: list[tuple[int, list[int], dict[int, list[tuple[int, int]]]]] = []
        all_classes = 0
        for xmask, prefixes in self.classes:
            cls = bits(xmask)
            for a, b in zip(cls, cls[1:]):
                pred[b] = a
            all_classes |= xmask
            by_count: dict[int, list[tuple[int, int]]] = {}
            for c in range(1, len(cls)):
                opts = []
                for start in range(len(cls) - c + 1):
                    part = prefixes[start + c] & ~prefixes[start]
                    u = 0
                    for v in cls[start:start + c]:
                        u |= rows[v]
                    opts.append((part, u))
                by_count[c] = opts
            runs.append((xmask, cls, by_count))
        rep = self.rep
        out = []
        remaining = region
        for r in bits(region):
            if pred[r] >= 0:
                continue
            rb = 1 << r
            stack = [(rb, rows[r], 0, rep[r])]
            while stack:
                s, ns, excl, key = stack.pop()
                cand = ns & remaining & ~s & ~excl
                if cand:
                    low = cand & -cand
                    v = low.bit_length() - 1
                    stack.append((s, ns, excl | low, key))
                    if pred[v] < 0 or (s >> pred[v]) & 1:
                        stack.append((s | low, ns | rows[v], excl, min(key, rep[v])))
                    continue
                variants = [(s & ~all_classes, 0)]
                for v in bits(s & ~all_classes):
                    variants[0] = (variants[0][0], variants[0][1] | rows[v])
                for xmask, cls, by_count in runs:
                    c = (s & xmask).bit_count()
                    if c == 0:
                        continue
                    if c == len(cls):
                        u = 0
                        for v in cls:
                            u |= rows[v]
                        variants = [(m | xmask, un | u) for m, un in variants]
                        continue
                    variants = [(m | part, un | u) for m, un in variants for part, u in by_count[c]]
                for m, un in variants:
                    out.append((m, un & ~m, key))
            remaining &= ~rb
        return out


@lru_cache(maxsize=256)
def _host_data(host: Graph, region: int, symmetry: bool) -> _HostData:
    return _HostData(host, region, symmetry)


class _Search:
    def __init__(
        self,
        host: Graph,
        pattern: Graph,
        region: int,
        budget: int,
        first: int | None = None,
        must: int | None = None,
        symmetry: bool = True,
        minimize: bool = False,
        host_data: _HostData | None = None,
    ):
        self.host = host
        self.pattern = pattern
        self.rows = host.rows
        self.region = region
        self.budget = budget
        self.minimize = minimize
        self.symmetry = symmetry and not minimize
        self.must = must
        prows = pattern.rows
        verts = [v for v in range(pattern.n) if prows[v]]

        # pattern order: first vertex, then most placed neighbours, degree, id
        if first is None:
            first = max(verts, key=lambda v: (prows[v].bit_count(), -v))
        order = [first]
        placed = 1 << first
        while len(order) < len(verts):
            nxt = max(
                (v for v in verts if not (placed >> v) & 1),
                key=lambda v: ((prows[v] & placed).bit_count(), prows[v].bit_count(), -v),
            )
            order.append(nxt)
            placed |= 1 << nxt
        self.order = order
        pos = {v: i for i, v in enumerate(order)}
        k = len(order)
        self.k = k
        self.placed_nbrs = [[pos[u] for u in bits(prows[v]) if pos[u] < i] for i, v in enumerate(order)]
        self.pending = [sum(1 for u in bits(prows[v]) if pos[u] > i) for i, v in enumerate(order)]
        # after placing position i, which earlier positions still wait for neighbours
        self.waiting = []
        for i in range(k):
            w = []
            for j in range(i + 1):
                cnt = sum(1 for u in bits(prows[order[j]]) if pos[u] > i)
                if cnt:
                    w.append((j, cnt))
            self.waiting.append(w)
        self.single_only = [
            prows[v].bit_count() == 1 and not self.pending[i] for i, v in enumerate(order)
        ]
        self.prev_twin: list[int | None] = [None] * k
        has_later_twin = [False] * k
        if self.symmetry:
            for cls in _twin_classes(prows, verts):
                chain = sorted(pos[v] for v in cls if not (must is not None and v == first))
                for a, b in zip(chain, chain[1:]):
                    self.prev_twin[b] = a
                    has_later_twin[a] = True
        self.minimal_only = [
            not self.pending[i] and not has_later_twin[i] for i in range(k)
        ]

        hd = host_data if host_data is not None else _host_data(host, region, self.symmetry)
        self.host_classes = hd.classes
        self.sets = hd.sets
        self.first_sets = hd.first_sets(must) if must is not None else hd.sets

        self.assign: list[int] = [0] * k
        self.nbr: list[int] = [0] * k
        self.keys: list[int] = [0] * k
        self.best_total = budget
        self.best: list[tuple[int, ...]] = []

    def _prefix_ok(self, used: int) -> bool:
        for xmask, prefixes in self.host_classes:
            part = used & xmask
            if part != prefixes[part.bit_count()]:
                return False
        return True

    def run(self) -> bool:
        return self._dfs(0, 0, 0)

    def _dfs(self, i: int, used: int, total: int) -> bool:
        if i == self.k:
            if self.minimize:
                key = tuple(self.assign)
                if total < self.best_total:
                    self.best_total = total
                    self.best = [key]
                else:
                    self.best.append(key)
                return False
            self.best = [tuple(self.assign)]
            return True
        limit = (self.best_total if self.minimize else self.budget) - total - (self.k - i - 1)
        region = self.region
        placed = self.placed_nbrs[i]
        pend = self.pending[i]
        prev = self.prev_twin[i]
        prev_key = self.keys[prev] if prev is not None else -1
        single = self.single_only[i]
        minimal = self.minimal_only[i]
        waiting = self.waiting[i]
        tried: list[int] = []
        sets = self.first_sets if i == 0 else self.sets
        for s, sz, ns, key in sets:
            if sz > limit or (single and sz > 1):
                break
            if s & used:
                continue
            if key < prev_key:
                continue
            ok = True
            for j in placed:
                if not ns & self.assign[j]:
                    ok = False
                    break
            if not ok:
                continue
            if minimal and any(t & s == t for t in tried):
                continue
            new_used = used | s
            free = region & ~new_used
            if pend and (ns & free).bit_count() < pend:
                continue
            self.assign[i] = s
            self.nbr[i] = ns
            for j, cnt in waiting:
                if (self.nbr[j] & free).bit_count() < cnt:
                    ok = False
                    break
            if not ok:
                continue
            if self.host_classes and not self._prefix_ok(new_used):
                continue
            if minimal:
                tried.append(s)
            self.keys[i] = key
            if self._dfs(i + 1, new_used, total + sz):
                return True
            if self.minimize:
                limit = self.best_total - total - (self.k - i - 1)
        self.assign[i] = 0
        return False


def _split_pattern(pattern: Graph) -> tuple[Graph, int]:
    core = strip_isolated(pattern)
    return core, pattern.n - core.n


def _regions(host: Graph, core: Graph, must: int | None) -> list[int]:
    # a connected pattern lives inside one host component
    if not is_connected(core):
        return [host.full_mask]
    comps = component_masks(host)
    if must is not None:
        comps = [c for c in comps if (c >> must) & 1]
    return [c for c in comps if c.bit_count() >= core.n and host.edges_within(c) >= core.m]


def _search_model(host: Graph, pattern: Graph, must: int | None = None) -> dict[int, int] | None:
    """Pattern vertex -> branch mask for the non-isolated pattern vertices, or None."""
    core_full = pattern
    prows = pattern.rows
    core_vertices = [v for v in range(pattern.n) if prows[v]]
    k_iso = pattern.n - len(core_vertices)
    if host.n < pattern.n:
        return None
    if k_iso and must is not None:
        # ``must`` may serve an isolated pattern vertex; search everything
        must = None
    if not core_vertices:
        return {}
    m_core = pattern.m
    if host.m < m_core:
        return None
    core, _ = _split_pattern(pattern)
    budget_all = host.n - k_iso
    if must is not None:
        must_classes = _twin_classes(pattern.rows, core_vertices)
        # any twin of ``must`` is interchangeable with it; use the class minimum
        hrows = host.rows
        must_rep = must
        for cls in _twin_classes(hrows, range(host.n)):
            if must in cls:
                must_rep = min(cls)
                break
        firsts = [cls[0] for cls in must_classes]
    for region in _regions(host, core, must):
        budget = min(region.bit_count(), budget_all)
        if must is None:
            s = _Search(host, core_full, region, budget)
            if s.run():
                return {s.order[i]: m for i, m in enumerate(s.best[0])}
        else:
            for h0 in firsts:
                s = _Search(host, core_full, region, budget, first=h0, must=must_rep)
                if s.run():
                    return {s.order[i]: m for i, m in enumerate(s.best[0])}
    return None


def _to_model(host: Graph, pattern: Graph, found: dict[int, int]) -> MinorModel:
    used = 0
    for m in found.values():
        used |= m
    spare = [v for v in range(host.n) if not (used >> v) & 1]
    sets = []
    for v in range(pattern.n):
        if v in found:
            sets.append(tuple(bits(found[v])))
        else:
            sets.append((spare.pop(0),))
    return MinorModel(host, pattern, tuple(sets))


# ---------------------------------------------------------------- public API


@lru_cache(maxsize=1 << 15)
def has_minor(host: Graph, pattern: Graph) -> bool:
    """True iff ``pattern`` is a minor of ``host``."""
    return _search_model(host, pattern) is not None


def has_minor_using(host: Graph, pattern: Graph, vertex: int) -> bool:
    """Minor test when ``host - vertex`` is known to be ``pattern``-minor-free.

    Only models touching ``vertex`` (or a host twin of it) are searched, so
    the answer equals :func:`has_minor` under that precondition.
    """
    return _search_model(host, pattern, must=vertex) is not None


def find_model(host: Graph, pattern: Graph) -> MinorModel | None:
    found = _search_model(host, pattern)
    if found is None:
        return None
    return _to_model(host, pattern, found)


def verify_model(host: Graph, pattern: Graph, model: MinorModel) -> bool:
    sets = model.branch_sets
    if len(sets) != pattern.n:
        return False
    seen = 0
    masks = []
    for b in sets:
        if not b or any(not 0 <= v < host.n for v in b):
            return False
        m = 0
        for v in b:
            m |= 1 << v
        if m & seen or m.bit_count() != len(b):
            return False
        seen |= m
        if not is_connected_mask(host, m):
            return False
        masks.append(m)
    for u, v in pattern.edges():
        if not host.neighborhood_of_set(masks[u]) & masks[v]:
            return False
    return True


def minimal_model(host: Graph, pattern: Graph) -> MinorModel | None:
    """Model minimising the total branch-set size; ties go to the
    lexicographically least tuple of sorted branch sets."""
    if host.n > 12:
        raise GraphError("minimal_model is limited to hosts with at most 12 vertices")
    prows = pattern.rows
    core_vertices = [v for v in range(pattern.n) if prows[v]]
    k_iso = pattern.n - len(core_vertices)
    if host.n < pattern.n:
        return None
    if not core_vertices:
        return MinorModel(host, pattern, tuple((v,) for v in range(pattern.n)))
    s = _Search(host, pattern, host.full_mask, host.n - k_iso, minimize=True)
    s.run()
    best: tuple | None = None
    for assign in s.best:
        # isolated pattern vertices take the smallest unused host vertices
        model = _to_model(host, pattern, {s.order[i]: m for i, m in enumerate(assign)})
        cand = (model.total, model.key())
        if best is None or cand < best:
            best = cand
    if best is None:
        return None
    return MinorModel(host, pattern, best[1])


def _cheapest_first(members: Sequence[Graph]) -> list[Graph]:
    return sorted(members, key=lambda h: (h.n, h.m))


def is_family_minor_free(g: Graph, family: FamilySpec | Iterable[Graph]) -> bool:
    return not any(has_minor(g, h) for h in _cheapest_first(as_members(family)))


def contains_family_minor_using(g: Graph, family: FamilySpec | Iterable[Graph], vertex: int) -> bool:
    """Family version of :func:`has_minor_using` (``g - vertex`` assumed free)."""
    return any(has_minor_using(g, h, vertex) for h in _cheapest_first(as_members(family)))


def is_saturated(g: Graph, family: FamilySpec | Iterable[Graph]) -> bool:
    """Minor-free and every added edge creates some member as a minor."""
    members = as_members(family)
    if not is_family_minor_free(g, members):
        raise GraphError("graph is not minor-free for the family")
    for u, v in g.non_edges():
        if not contains_family_minor_using(add_edge(g, u, v), members, u):
            return False
    return True


def dominating_reduction_sides(g: Graph, dominating: Iterable[int], family: FamilySpec | Iterable[Graph]) -> tuple[bool, bool]:
    """(g is family-minor-free, g - L is free of the reduced family)."""
    members = as_members(family)
    ell = sorted(set(dominating))
    for v in ell:
        if not 0 <= v < g.n or g.degree(v) != g.n - 1:
            raise GraphError(f"vertex {v} does not dominate the graph")
    if len(ell) != gamma_family(members):
        raise GraphError(f"|L| = {len(ell)} but gamma of the family is {gamma_family(members)}")
    left = is_family_minor_free(g, members)
    rest = induced(g, [v for v in range(g.n) if v not in ell])
    right = is_family_minor_free(rest, gamma_union_family(members))
    return left, right


def dominating_reduction_check(g: Graph, dominating: Iterable[int], family: FamilySpec | Iterable[Graph]) -> bool:
    left, right = dominating_reduction_sides(g, dominating, family)
    return left == right


# ---------------------------------------------------------------- oracle

_ORACLE_CHUNK = 1 << 18


def has_minor_oracle(host: Graph, pattern: Graph) -> bool:
    """Exhaustive check over every map from host vertices to pattern labels
    plus "unused"; no pruning. Limited to 9 host and 6 pattern vertices."""
    g, h = host.n, pattern.n
    if g > 9 or h > 6:
        raise GraphError("oracle is limited to |G| <= 9 and |H| <= 6")
    if h == 0:
        return True
    if h > g:
        return False
    nmask = 1 << g
    nbr = np.zeros(nmask, dtype=np.int64)
    conn = np.zeros(nmask, dtype=bool)
    for m in range(1, nmask):
        nb = 0
        for v in range(g):
            if (m >> v) & 1:
                nb |= host.rows[v]
        nbr[m] = nb
        # flood fill from the lowest vertex
        seen = m & -m
        frontier = seen
        while frontier:
            step = 0
            for v in range(g):
                if (frontier >> v) & 1:
                    step |= host.rows[v]
            frontier = step & m & ~seen
            seen |= frontier
        conn[m] = seen == m
    base = h + 1
    total = base ** g
    pedges = pattern.edges()
    powers = base ** np.arange(g, dtype=np.int64)
    weights = np.int64(1) << np.arange(g, dtype=np.int64)
    for start in range(0, total, _ORACLE_CHUNK):
        idx = np.arange(start, min(total, start + _ORACLE_CHUNK), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % base
        ok = np.ones(len(idx), dtype=bool)
        masks = []
        for lab in range(h):
            mk = ((digits == lab) * weights[None, :]).sum(axis=1)
            masks.append(mk)
            ok &= conn[mk]
        for u, v in pedges:
            ok &= (nbr[masks[u]] & masks[v]) != 0
        if ok.any():
            return True
    return False
