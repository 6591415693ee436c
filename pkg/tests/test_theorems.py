from __future__ import annotations

import math

import pytest

from minorspex.canon import canonical_form
from minorspex.constructions import complete, join, named, path
from minorspex.graph import Graph, disjoint_union
from minorspex.invariants import FamilySpec
from minorspex.theorems import THEOREM_IDS, verify_theorem


def run(theorem, n, **params):
    rep = verify_theorem(theorem, n, **params)
    assert rep.verdict["passed"], rep.verdict
    return rep


def test_fan_prediction_example():
    rep = run("thm1.4", 8, a=2)
    assert rep.predicted["graphs"] == [canonical_form(join(complete(1), path(7))).decode()]
    assert set(rep.verdict["asserted"]) == {"predicted_minor_free", "predicted_rho_le_spex"}
    assert isinstance(rep.verdict["reported"]["set_equality"], bool)


@pytest.mark.parametrize("n", range(5, 10))
def test_star4_extremal_set_is_asserted(n):
    rep = run("lemma3.2", n)
    assert rep.verdict["asserted"]["set_equality"] and rep.value == n + 2


@pytest.mark.parametrize("t", [3, 4, 5])
def test_star_extremal_value_is_asserted(t):
    for n in range(t + 2, 9):
        rep = run("lemma3.1", n, t=t)
        assert rep.value == math.comb(t, 2) + n - t


def test_book_lower_bound_entry():
    rep = verify_theorem("thm1.1-lb", 10, family=FamilySpec.of([named("W5")]))
    assert rep.verdict["passed"]
    assert abs(rep.value - 4.531128874) <= 1e-9
    with pytest.raises(ValueError):
        verify_theorem("thm1.1-lb", 10)


@pytest.mark.parametrize(
    "theorem, n, params",
    [
        ("thm1.6", 8, {"k": 4}),
        ("thm1.6", 8, {"k": 5}),
        ("thm1.7", 8, {"lengths": (3, 3)}),
        ("thm1.7", 8, {"lengths": (4, 4)}),
        ("thm1.5", 8, {"r": 5, "h": disjoint_union([complete(2), complete(2)])}),
        ("thm1.5", 8, {"r": 5, "h": path(3)}),
        ("thm1.8", 8, {"parts": (3, 2, 1)}),
        ("thm1.8", 8, {"parts": (3, 1, 1)}),
        ("thm4.2", 8, {"parts": (2, 2, 1)}),
        ("thm4.3", 8, {"s1": 3}),
        ("thm4.4", 8, {"s1": 4}),
    ],
)
def test_catalog_assertions_hold_at_small_n(theorem, n, params):
    rep = run(theorem, n, **params)
    assert rep.predicted["graphs"]
    assert rep.verdict["reported"]["spanning_book"] in (True, False)


def test_unknown_theorem():
    with pytest.raises(KeyError):
        verify_theorem("thm9.9", 6)
    assert "thm1.1-lb" in THEOREM_IDS


def test_prediction_errors_are_reported_not_raised():
    rep = verify_theorem("thm4.4", 5, s1=4)
    if not rep.predicted["graphs"]:
        assert "predicted_unavailable" in rep.verdict["reported"]
    assert isinstance(rep.verdict["passed"], bool)
