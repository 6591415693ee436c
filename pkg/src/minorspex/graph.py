"""Immutable small graphs with bitmask adjacency rows.

A :class:`Graph` on ``n <= 64`` vertices stores one integer per vertex; bit
``j`` of ``rows[i]`` is set iff ``ij`` is an edge. All operations return new
graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Raised when an operation would produce more than 64 vertices."""


class GraphError(ValueError):
    """Raised on a missing vertex or edge, or an otherwise invalid argument."""


class Graph6Error(ValueError):
    """Base class for graph6 decoding errors."""


class Graph6HeaderError(Graph6Error):
    """Empty input, an unsupported prefix, or a byte outside the printable range."""


class Graph6SizeError(Graph6Error):
    """Vertex count outside ``0..64`` or a body that is too short."""


class Graph6TrailingDataError(Graph6Error):
    """Bytes left over after the encoded adjacency bits."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Vertex ids set in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("rows length does not match n")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full or (r >> i) & 1:
                raise GraphError(f"row {i} has a loop or an out-of-range neighbour")
            for j in _bits(r):
                if not (self.rows[j] >> i) & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    # construction -------------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        """Skip validation; for rows built by the operations in this module."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph order {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # basic queries ------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        full = self.full_mask
        out = []
        for u in range(self.n):
            missing = full & ~self.rows[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in _bits(missing))
        return out

    def neighborhood_of_set(self, mask: int) -> int:
        """Vertices outside ``mask`` adjacent to some vertex in ``mask``."""
        nb = 0
        for v in _bits(mask):
            nb |= self.rows[v]
        return nb & ~mask

    def edges_within(self, mask: int) -> int:
        return sum((self.rows[v] & mask).bit_count() for v in _bits(mask)) // 2

    def edges_between(self, s: int, t: int) -> int:
        return sum((self.rows[v] & t).bit_count() for v in _bits(s))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


# ---------------------------------------------------------------- graph6


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no header, no newline)."""
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line. An optional ``>>graph6<<`` header is accepted."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    if s[0] in ":&;":
        raise Graph6HeaderError(f"unsupported format prefix {s[0]!r} (only graph6 is read)")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6HeaderError(f"byte {ch!r} outside the graph6 range 63..126")
    data = [ord(ch) - 63 for ch in s]
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise Graph6SizeError("8-byte vertex counts exceed the 64-vertex cap")
        if len(data) < 4:
            raise Graph6SizeError("truncated 4-byte vertex count")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6SizeError(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6SizeError(f"body has {len(body)} bytes, {need} required for n={n}")
    if len(body) > need:
        raise Graph6TrailingDataError(f"{len(body) - need} trailing bytes after the adjacency data")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6TrailingDataError("nonzero padding bits")
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Parse a corpus: one graph per non-blank line, ``#`` comments skipped."""
    out = []
    for line in lines:
        s = line.strip()
        if s and not s.startswith("#"):
            out.append(from_graph6(s))
    return out


# ---------------------------------------------------------------- operations


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    total = sum(p.n for p in parts)
    if total > MAX_VERTICES:
        raise CapacityError(f"union has {total} vertices")
    rows: list[int] = []
    off = 0
    for p in parts:
        rows.extend(r << off for r in p.rows)
        off += p.n
    return Graph._trusted(total, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides (``g1`` first)."""
    total = g1.n + g2.n
    if total > MAX_VERTICES:
        raise CapacityError(f"join has {total} vertices")
    a = g1.full_mask
    b = g2.full_mask << g1.n
    rows = [r | b for r in g1.rows] + [(r << g1.n) | a for r in g2.rows]
    return Graph._trusted(total, tuple(rows))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph of order {g.n}")


def _check_edge(g: Graph, u: int, v: int) -> None:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")


def _compact(rows: list[int], drop: int) -> tuple[int, ...]:
    """Remove vertex ``drop`` from every row and shift higher ids down by one."""
    low = (1 << drop) - 1
    out = []
    for i, r in enumerate(rows):
        if i == drop:
            continue
        out.append((r & low) | ((r >> (drop + 1)) << drop))
    return tuple(out)


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return Graph._trusted(g.n - 1, _compact(list(g.rows), v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_edge(g, u, v)
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("loops are not allowed")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(g.n, tuple(rows))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge ``u`` and ``v``; the smaller id survives and labels are compacted."""
    _check_edge(g, u, v)
    keep, drop = min(u, v), max(u, v)
    rows = list(g.rows)
    merged = (rows[keep] | rows[drop]) & ~(1 << keep) & ~(1 << drop)
    rows[keep] = merged
    for w in _bits(merged):
        rows[w] = (rows[w] & ~(1 << drop)) | (1 << keep)
    rows[drop] = 0
    return Graph._trusted(g.n - 1, _compact(rows, drop))


def subdivide_edge(g: Graph, u: int, v: int, times: int = 1) -> Graph:
    """Replace ``uv`` by a path through ``times`` new vertices ``n, n+1, ...``."""
    _check_edge(g, u, v)
    if times < 1:
        raise GraphError("subdivision count must be positive")
    n = g.n
    if n + times > MAX_VERTICES:
        raise CapacityError(f"subdivision would give {n + times} vertices")
    edges = [e for e in g.edges() if set(e) != {u, v}]
    chain = [u] + list(range(n, n + times)) + [v]
    edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(n + times, edges)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in id order."""
    vs = sorted(set(vertices))
    for v in vs:
        _check_vertex(g, v)
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        rows.append(mask_of(pos[w] for w in _bits(g.rows[v]) if w in pos))
    return Graph._trusted(len(vs), tuple(rows))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(order):
        rows[i] = mask_of(pos[w] for w in _bits(g.rows[v]))
    return Graph._trusted(g.n, tuple(rows))


def strip_isolated(g: Graph) -> Graph:
    return induced(g, [v for v in range(g.n) if g.rows[v]])


# ---------------------------------------------------------------- connectivity


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex masks of the connected components of ``g[within]``, by lowest id."""
    remaining = g.full_mask if within is None else within
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nb = 0
            for v in _bits(frontier):
                nb |= g.rows[v]
            frontier = nb & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def components(g: Graph) -> list[list[int]]:
    return [bits(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True for connected graphs of order >= 1; the 0-vertex graph is not connected."""
    return len(component_masks(g)) == 1


def is_connected_mask(g: Graph, mask: int) -> bool:
    return mask != 0 and len(component_masks(g, mask)) == 1


def is_regular(g: Graph, d: int | None = None) -> bool:
    degs = g.degrees()
    if not degs:
        return True
    return len(set(degs)) == 1 and (d is None or degs[0] == d)


def cut_vertices(g: Graph) -> int:
    """Mask of articulation points (vertices whose removal adds a component)."""
    n = g.n
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    cut = 0
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, rows[root])]
        while stack:
            v, parent, pending = stack[-1]
            if pending:
                bit = pending & -pending
                stack[-1] = (v, parent, pending ^ bit)
                w = bit.bit_length() - 1
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, rows[w]))
                elif disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != root and low[v] >= disc[parent]:
                    cut |= 1 << parent
        if root_children > 1:
            cut |= 1 << root
    return cut
