from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms import isomorphism

from conftest import graphs, to_nx
from minorspex.canon import canonical_form
from minorspex.constructions import (
    complete,
    complete_multipartite,
    cycle,
    empty,
    flower,
    named,
    path,
    petersen,
    star,
    wheel,
)
from minorspex.graph import GraphError, delete_edge, disjoint_union
from minorspex.invariants import (
    FamilySpec,
    alpha_family,
    c_family,
    clique_number,
    contains_subgraph,
    family_invariants,
    gamma,
    gamma_family,
    gamma_union_family,
    independence_number,
    induced_family,
    irreducible_family,
    is_connected_family,
    is_star,
    minimal_members,
)


def labels(gs):
    return sorted(canonical_form(g) for g in gs)


@given(graphs(max_n=12))
def test_independence_number_matches_networkx(g):
    comp = nx.complement(to_nx(g))
    expect = max((len(c) for c in nx.find_cliques(comp)), default=0)
    assert independence_number(g) == expect


def test_independence_and_clique_examples():
    assert independence_number(complete_multipartite((4, 2, 1))) == 4
    assert independence_number(complete(6)) == 1
    assert independence_number(petersen()) == 4
    assert clique_number(delete_edge(complete(5), 0, 1)) == 4
    assert clique_number(disjoint_union([complete(2)] * 3)) == 2
    assert clique_number(cycle(5)) == 2


@given(st.lists(st.integers(1, 4), min_size=2, max_size=4))
def test_gamma_of_complete_multipartite(parts):
    parts = sorted(parts, reverse=True)
    assert gamma(complete_multipartite(parts)) == sum(parts[1:]) - 1


@pytest.mark.parametrize("k", range(3, 10))
def test_gamma_of_wheel(k):
    assert gamma(wheel(k)) == math.ceil(k / 2)


@pytest.mark.parametrize("lengths", [(3, 3), (3, 4), (4, 4), (3, 5, 4), (5, 5)])
def test_gamma_of_flower(lengths):
    assert gamma(flower(lengths)) == sum(math.ceil(s / 2) for s in lengths) - len(lengths)


def test_family_invariants_of_k5():
    inv = family_invariants([complete(5)])
    assert (inv.gamma_family, inv.alpha_family, inv.c_family, inv.minimal_ids) == (3, 1, 640, (0,))


def test_minimal_member_prefers_least_order():
    fam = [complete(4), complete_multipartite((2, 3))]
    assert gamma_family(fam) == 1
    assert minimal_members(fam) == [1]
    assert alpha_family(fam) == 3
    assert c_family(fam) == 2 ** 6 * 6
    # K_5 - e and K_4 both have gamma 2; K_4 is smaller
    tie = [delete_edge(complete(5), 0, 1), complete(4)]
    assert minimal_members(tie) == [1]
    assert c_family(tie) == 2 ** 5 * 6


@given(st.lists(st.sampled_from(["K4", "K5", "K3,3", "K2,3", "W5", "W6", "F3,3", "K3,2,1", "C5", "P4"]), min_size=1, max_size=3))
def test_minimal_members_share_alpha_and_bound(names):
    fam = [named(s) for s in names]
    ids = minimal_members(fam)
    assert len({independence_number(fam[i]) for i in ids}) == 1
    assert gamma_family(fam) + alpha_family(fam) < c_family(fam)


def test_induced_family_examples():
    assert labels(induced_family(complete(3), 3)) == labels([complete(3)])
    fam = labels(induced_family(complete_multipartite((2, 3)), 4))
    assert canonical_form(star(3)) in fam and canonical_form(cycle(4)) in fam
    assert len(induced_family(empty(6), 3)) == 1


def test_irreducible_family_examples():
    assert labels(irreducible_family(complete_multipartite((2, 3)), 4)) == labels([star(3), cycle(4)])
    assert labels(irreducible_family(complete(4), 3)) == labels([complete(3)])
    for s1 in (3, 4, 5):
        h = complete_multipartite((s1, 1, 1))
        assert labels(irreducible_family(h, s1 + 1)) == labels([star(s1)])


def monomorphic(host, pattern) -> bool:
    return isomorphism.GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_monomorphic()


@given(graphs(max_n=7), graphs(max_n=5))
@settings(max_examples=300)
def test_contains_subgraph_matches_networkx(host, pattern):
    assert contains_subgraph(host, pattern) == monomorphic(host, pattern)


@given(graphs(min_n=2, max_n=7), st.data())
@settings(max_examples=100)
def test_irreducible_family_is_a_minimal_cover(h, data):
    s = data.draw(st.integers(1, h.n))
    full = induced_family(h, s)
    irr = irreducible_family(h, s)
    assert all(any(contains_subgraph(g, o) for o in irr) for g in full)
    for a in irr:
        for b in irr:
            if a is not b:
                assert not (b.m < a.m and contains_subgraph(a, b))


def test_gamma_union_family_examples():
    got = labels(gamma_union_family([complete_multipartite((2, 3)), complete(4)]))
    assert got == labels([star(3), cycle(4), complete(3)])
    h = complete_multipartite((3, 2, 1))
    assert labels(gamma_union_family([h])) == labels(irreducible_family(complete_multipartite((3, 2)), 4))
    for name in ("K5", "W5", "K3,3", "F3,4"):
        g = named(name)
        assert labels(gamma_union_family([g])) == labels(irreducible_family(g, independence_number(g) + 1))


def test_is_connected_family():
    assert is_connected_family([star(3), cycle(4), complete(3)])
    assert not is_connected_family([disjoint_union([complete(2)] * 2)])
    fam = irreducible_family(complete_multipartite((4, 2)), 5)
    assert isinstance(is_connected_family(fam), bool)


def test_family_spec_normalisation():
    fam = FamilySpec.of([disjoint_union([complete(3), empty(2)])])
    assert fam.members == (complete(3),)
    with pytest.raises(GraphError):
        FamilySpec.of([empty(3)])
    with pytest.raises(GraphError):
        FamilySpec.of([])
    assert FamilySpec.of([star(4)]).has_star()
    assert FamilySpec.of([complete(2)]).has_star()
    assert not FamilySpec.of([path(4)]).has_star()
    assert is_star(disjoint_union([star(3), empty(1)]))
