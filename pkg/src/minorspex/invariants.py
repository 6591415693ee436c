"""Exact invariants of forbidden-minor families."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .canon import canonical_form
from .graph import Graph, GraphError, complement, induced, is_connected, strip_isolated

log = logging.getLogger(__name__)


def _max_independent(rows: Sequence[int], cand: int, size: int, best: list[int]) -> None:
    if not cand:
        if size > best[0]:
            best[0] = size
        return
    # bound: current + remaining candidates
    if size + cand.bit_count() <= best[0]:
        return
    # branch on a vertex of maximum degree inside cand; degree <= 1 is solved greedily
    v, dv = -1, -1
    c = cand
    while c:
        low = c & -c
        u = low.bit_length() - 1
        d = (rows[u] & cand).bit_count()
        if d > dv:
            v, dv = u, d
        c ^= low
    if dv <= 1:
        # disjoint edges and isolated vertices: take one per edge
        edges = sum((rows[u] & cand).bit_count() for u in _iter(cand)) // 2
        total = size + cand.bit_count() - edges
        if total > best[0]:
            best[0] = total
        return
    vb = 1 << v
    _max_independent(rows, cand & ~vb & ~rows[v], size + 1, best)
    _max_independent(rows, cand & ~vb, size, best)


def _iter(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def independence_number(g: Graph) -> int:
    """Exact alpha(G) by branch and bound on bitsets."""
    best = [0]
    _max_independent(g.rows, g.full_mask, 0, best)
    return best[0]


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))


def is_star(g: Graph) -> bool:
    """K_{1,t} for some t >= 1 (K_2 counts), ignoring isolated vertices."""
    h = strip_isolated(g)
    if h.n < 2 or h.m != h.n - 1:
        return False
    degs = sorted(h.degrees())
    return degs[-1] == h.n - 1


@dataclass(frozen=True)
class FamilySpec:
    members: tuple[Graph, ...]
    normalized: bool = True

    @classmethod
    def of(cls, graphs: Iterable[Graph], normalize: bool = True) -> FamilySpec:
        gs = list(graphs)
        if not gs:
            raise GraphError("a family needs at least one member")
        if normalize:
            out = []
            for g in gs:
                h = strip_isolated(g)
                if h.n != g.n:
                    log.warning("stripped %d isolated vertices from a family member", g.n - h.n)
                if h.m == 0:
                    raise GraphError("family member has no edges")
                out.append(h)
            gs = out
        return cls(tuple(gs), normalize)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def has_star(self) -> bool:
        return any(is_star(h) for h in self.members)


def as_members(family: FamilySpec | Iterable[Graph]) -> tuple[Graph, ...]:
    return family.members if isinstance(family, FamilySpec) else tuple(family)


def gamma(h: Graph) -> int:
    """gamma_H = |H| - alpha_H - 1."""
    return h.n - independence_number(h) - 1


def gamma_family(family: FamilySpec | Iterable[Graph]) -> int:
    members = as_members(family)
    if not members:
        raise GraphError("empty family")
    return min(gamma(h) for h in members)


def minimal_members(family: FamilySpec | Iterable[Graph]) -> list[int]:
    """Indices of members with gamma_H = gamma_family and least order among those."""
    members = as_members(family)
    gf = gamma_family(members)
    tied = [i for i, h in enumerate(members) if gamma(h) == gf]
    least = min(members[i].n for i in tied)
    return [i for i in tied if members[i].n == least]


def alpha_family(family: FamilySpec | Iterable[Graph]) -> int:
    members = as_members(family)
    return independence_number(members[minimal_members(members)[0]])


def c_member(h: Graph) -> int:
    return 2 ** (h.n + 1) * h.m


def c_family(family: FamilySpec | Iterable[Graph]) -> int:
    members = as_members(family)
    return min(c_member(members[i]) for i in minimal_members(members))


@dataclass(frozen=True)
class FamilyInvariants:
    gamma_family: int
    alpha_family: int
    c_family: int
    minimal_ids: tuple[int, ...] = field(default_factory=tuple)


def family_invariants(family: FamilySpec | Iterable[Graph]) -> FamilyInvariants:
    members = as_members(family)
    return FamilyInvariants(
        gamma_family(members), alpha_family(members), c_family(members), tuple(minimal_members(members))
    )


# ---------------------------------------------------------------- subgraph test


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """True iff ``pattern`` is isomorphic to a (not necessarily induced) subgraph of ``host``."""
    if pattern.n > host.n or pattern.m > host.m:
        return False
    order = sorted(range(pattern.n), key=lambda v: -pattern.degree(v))
    hdeg = host.degrees()
    image = [-1] * pattern.n

    def extend(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        need = 0
        for u in order[:k]:
            if pattern.has_edge(u, v):
                need |= 1 << image[u]
        cand = host.full_mask & ~used
        for w in range(host.n):
            if not (cand >> w) & 1 or hdeg[w] < pattern.degree(v):
                continue
            if host.rows[w] & need != need:
                continue
            image[v] = w
            if extend(k + 1, used | (1 << w)):
                return True
        image[v] = -1
        return False

    return extend(0, 0)


# ---------------------------------------------------------------- Gamma families


def _sorted_unique(graphs: Iterable[Graph]) -> list[Graph]:
    by_label: dict[bytes, Graph] = {}
    for g in graphs:
        by_label.setdefault(canonical_form(g), g)
    return [by_label[k] for k in sorted(by_label)]


def induced_family(h: Graph, s: int) -> list[Graph]:
    """One representative per isomorphism class of the s-vertex induced subgraphs."""
    if not 1 <= s <= h.n:
        raise GraphError(f"s={s} outside 1..{h.n}")
    return _sorted_unique(induced(h, sub) for sub in combinations(range(h.n), s))


def irreducible_family(h: Graph, s: int) -> list[Graph]:
    """Members of the s-vertex induced family having no other member as a proper subgraph."""
    fam = induced_family(h, s)
    out = []
    for g in fam:
        if not any(o.m < g.m and contains_subgraph(g, o) for o in fam):
            out.append(g)
    return out


def gamma_union_family(family: FamilySpec | Iterable[Graph]) -> list[Graph]:
    """Union over members H of the irreducible family at size |H| - gamma_family."""
    members = as_members(family)
    gf = gamma_family(members)
    return _sorted_unique(g for h in members for g in irreducible_family(h, h.n - gf))


def is_connected_family(family: Iterable[Graph]) -> bool:
    return all(is_connected(g) for g in family)
