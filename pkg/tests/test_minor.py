from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from minorspex.constructions import (
    book,
    complete,
    complete_multipartite,
    cycle,
    flower,
    join,
    named,
    path,
    petersen,
    star,
    subdivided_clique,
    wheel,
)
from minorspex.graph import Graph, GraphError, delete_vertex, disjoint_union
from minorspex.invariants import gamma, gamma_family, independence_number
from minorspex.minor import (
    MinorModel,
    dominating_reduction_check,
    dominating_reduction_sides,
    find_model,
    has_minor,
    has_minor_oracle,
    has_minor_using,
    is_family_minor_free,
    is_saturated,
    minimal_model,
    verify_model,
)
from minorspex.search import enumerate_all_graphs

K33 = complete_multipartite((3, 3))
K5 = complete(5)


def test_has_minor_examples():
    assert not has_minor(K33, K5)
    assert has_minor(petersen(), K5)
    assert has_minor(petersen(), K33)
    assert has_minor_oracle(complete(4), complete(4))
    assert not has_minor_oracle(cycle(6), complete(4))


@pytest.mark.parametrize("name", ["K5", "W5", "K3,3"])
def test_book_is_free_of_the_pattern(name):
    h = named(name)
    g = gamma(h)
    for n in range(g + 1, 13):
        assert not has_minor(book(g, n - g), h)


def test_find_model_examples():
    m = find_model(cycle(5), complete(3))
    assert m is not None and verify_model(cycle(5), complete(3), m)
    assert len(m.branch_sets) == 3
    for h in (complete(4), complete_multipartite((2, 3))):
        host = book(gamma(h) + 1, independence_number(h))
        m = find_model(host, h)
        assert m is not None and verify_model(host, h, m)
    tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert find_model(tree, complete(3)) is None


def test_verify_model_rejects_bad_models():
    c5, k3 = cycle(5), complete(3)
    assert verify_model(c5, k3, MinorModel(c5, k3, ((0,), (1,), (2, 3, 4))))
    assert not verify_model(c5, k3, MinorModel(c5, k3, ((0,), (0, 1), (2, 3, 4))))
    assert not verify_model(c5, k3, MinorModel(c5, k3, ((0,), (1,), (2, 3))))
    assert not verify_model(c5, k3, MinorModel(c5, k3, ((0,), (2,), (1, 3, 4))))
    assert not verify_model(c5, k3, MinorModel(c5, k3, ((0,), (1,), ())))
    assert not verify_model(c5, k3, MinorModel(c5, k3, ((0,), (1,))))


def test_minimal_model_examples():
    m = minimal_model(K5, K5)
    assert m is not None and m.total == 5 and all(len(b) == 1 for b in m.branch_sets)
    # any four vertices of C_5 induce P_4, which has no triangle minor
    m = minimal_model(cycle(5), complete(3))
    assert m is not None and m.total == 5
    assert not has_minor(path(4), complete(3))


@given(graphs(max_n=7), graphs(min_n=1, max_n=4))
@settings(max_examples=150, deadline=None)
def test_minimal_model_is_no_larger_than_found(g, h):
    found = find_model(g, h)
    best = minimal_model(g, h)
    assert (found is None) == (best is None)
    if found is not None:
        assert verify_model(g, h, best)
        assert best.total <= found.total


@given(graphs(max_n=7), graphs(max_n=5))
@settings(max_examples=400, deadline=None)
def test_has_minor_matches_oracle(g, h):
    assert has_minor(g, h) == has_minor_oracle(g, h)


@given(graphs(max_n=8), graphs(min_n=1, max_n=5))
@settings(max_examples=300, deadline=None)
def test_find_model_is_sound(g, h):
    m = find_model(g, h)
    assert (m is not None) == has_minor(g, h)
    if m is not None:
        assert verify_model(g, h, m)


@given(graphs(min_n=1, max_n=8), graphs(min_n=1, max_n=5), st.data())
@settings(max_examples=300, deadline=None)
def test_must_use_search_under_its_precondition(g, h, data):
    v = data.draw(st.integers(0, g.n - 1))
    assume(not has_minor(delete_vertex(g, v), h))
    assert has_minor_using(g, h, v) == has_minor(g, h)


@given(graphs(max_n=9), graphs(min_n=1, max_n=5))
@settings(max_examples=200, deadline=None)
def test_subgraphs_are_minors(g, h):
    if h.n <= g.n:
        host = disjoint_union([g, h])
        assert has_minor(host, h)
        assert not is_family_minor_free(host, [h])


def test_planarity_proxy_matches_networkx():
    for n in range(1, 8):
        for g in enumerate_all_graphs(n):
            planar, _ = nx.check_planarity(to_nx(g))
            assert is_family_minor_free(g, [K5, K33]) == planar


@pytest.mark.parametrize("family", [["K2,3", "K4"], ["K5"], ["W5"], ["K3,3"]])
def test_book_is_family_minor_free(family):
    fam = [named(s) for s in family]
    g = gamma_family(fam)
    for n in range(g + 1, 13):
        assert is_family_minor_free(book(g, n - g), fam)


def test_saturation_examples():
    for n in range(6, 10):
        assert is_saturated(subdivided_clique(4, n - 4), [star(4)])
    fam = [star(3), cycle(4), complete(3)]
    for n in range(2, 10):
        assert is_saturated(path(n), fam)
    assert is_saturated(complete(4), [complete(5)])
    # trees are triangle-saturated but a path is not K_4-saturated
    assert is_saturated(path(4), [complete(3)])
    assert not is_saturated(path(4), [complete(4)])
    assert not is_saturated(Graph.empty(3), [complete(3)])
    with pytest.raises(GraphError):
        is_saturated(complete(3), [complete(3)])


def test_dominating_reduction_examples():
    w5 = [wheel(4)]
    g = join(complete(2), disjoint_union([complete(4), complete(2)]))
    assert dominating_reduction_check(g, [0, 1], w5)
    for n in range(5, 11):
        b = book(2, n - 2)
        assert dominating_reduction_sides(b, [0, 1], w5) == (True, True)
    # plant a triangle below the dominating pair
    bad = join(complete(2), disjoint_union([complete(3), Graph.empty(3)]))
    assert dominating_reduction_sides(bad, [0, 1], w5) == (False, False)
    with pytest.raises(GraphError):
        dominating_reduction_sides(cycle(5), [0, 1], w5)


@pytest.mark.parametrize("lengths", [(3, 3), (3, 4), (4, 4)])
def test_dominating_reduction_on_flowers(lengths):
    fam = [flower(lengths)]
    gam = gamma_family(fam)
    for n in range(gam + 4, gam + 9):
        for rest in (path(n - gam), disjoint_union([complete(3), path(n - gam - 3)])):
            g = join(complete(gam), rest)
            assert dominating_reduction_check(g, range(gam), fam)


def test_oracle_limits():
    with pytest.raises(GraphError):
        has_minor_oracle(complete(10), complete(3))
