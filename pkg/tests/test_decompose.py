from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import graphs
from minorspex.constructions import complete, cycle, flower, path, star, subdivided_clique
from minorspex.decompose import (
    degree_classes,
    is_closed,
    longest_maximal_linear_path,
    maximal_linear_paths,
    path_edges,
    path_order,
    phi_identity_check,
)
from minorspex.graph import Graph, GraphError, disjoint_union


def edge_classes(g: Graph) -> set[frozenset]:
    """Union-find over edges, merging the two edges at every degree-2 vertex."""
    edges = g.edges()
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for v in range(g.n):
        if g.degree(v) == 2:
            a, b = g.neighbors(v)
            parent[find((min(a, v), max(a, v)))] = find((min(b, v), max(b, v)))
    groups: dict = {}
    for e in edges:
        groups.setdefault(find(e), set()).add(e)
    return {frozenset(s) for s in groups.values()}


def check_decomposition(g: Graph) -> None:
    dec = maximal_linear_paths(g)
    deg = g.degrees()
    all_edges = [e for p in dec.paths for e in path_edges(p)]
    assert sorted(all_edges) == g.edges()
    assert {frozenset(path_edges(p)) for p in dec.paths} == edge_classes(g)
    for p in dec.paths:
        inner = p[1:-1]
        assert all(deg[v] == 2 for v in inner)
        if not is_closed(p):
            assert len(set(p)) == len(p)
            assert deg[p[0]] != 2 and deg[p[-1]] != 2
        elif len(dec.paths) > 1:
            # a closed path hangs off one vertex of degree other than 2
            assert deg[p[0]] != 2


@given(graphs(min_n=2, max_n=10, connected=True))
@settings(max_examples=300)
def test_decomposition_properties(g):
    check_decomposition(g)


@given(graphs(min_n=2, max_n=10, connected=True))
@settings(max_examples=300)
def test_phi_identity_on_non_cycles(g):
    if g.n >= 3 and all(d == 2 for d in g.degrees()):
        with pytest.raises(GraphError):
            phi_identity_check(g)
    else:
        assert phi_identity_check(g)


def test_examples():
    dec = maximal_linear_paths(cycle(7))
    assert dec.phi == 1 and is_closed(dec.paths[0]) and path_order(dec.paths[0]) == 7
    for n in range(2, 9):
        assert maximal_linear_paths(path(n)).phi == 1
    s3 = subdivided_clique(4, 3)
    dec = maximal_linear_paths(s3)
    assert dec.phi == 6
    assert sorted(path_order(p) for p in dec.paths) == [2, 2, 2, 2, 2, 5]
    assert sum(d for d in s3.degrees() if d != 2) == 12 == 2 * dec.phi
    assert phi_identity_check(path(6))


def test_longest_path_examples():
    for n in range(6, 12):
        p = longest_maximal_linear_path(subdivided_clique(4, n - 4))
        assert path_order(p) == n - 2
        assert {p[0], p[-1]} == {0, 1}
    assert longest_maximal_linear_path(complete(4)) == (0, 1)


@given(graphs(min_n=2, max_n=10, connected=True))
@settings(max_examples=300)
def test_pigeonhole_floor_without_closed_paths(g):
    dec = maximal_linear_paths(g)
    if any(is_closed(p) for p in dec.paths):
        return
    best = longest_maximal_linear_path(g)
    assert path_order(best) >= g.m / dec.phi + 1


def test_pigeonhole_floor_needs_open_paths():
    # the petals of a flower are closed, so a petal of length s has only s vertices
    f = flower([3, 3])
    dec = maximal_linear_paths(f)
    assert dec.phi == 2 and all(is_closed(p) for p in dec.paths)
    assert path_order(longest_maximal_linear_path(f)) == 3 < f.m / dec.phi + 1


def test_degree_classes():
    ones, twos, big = degree_classes(star(3))
    assert (ones, twos, big) == ([1, 2, 3], [], [0])
    ones, twos, big = degree_classes(subdivided_clique(4, 2))
    assert ones == [] and len(twos) == 2 and len(big) == 4


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        maximal_linear_paths(Graph.empty(1))
    with pytest.raises(GraphError):
        maximal_linear_paths(disjoint_union([complete(2), complete(2)]))
