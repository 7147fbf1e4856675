import json
import logging
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedsparse import build, dumps, load, restrict_to_level, span
from gradedsparse.hypergraph import GradingMode, HypergraphError, make_edge

from .conftest import random_instance


def doc(**kw):
    base = {"n": 3, "k": 2, "ell": [0, 3], "grading": "standard", "edges": []}
    base.update(kw)
    return json.dumps(base)


def test_load_standard_levels():
    edges = [{"vertices": v} for v in ([0, 1], [1, 2], [0, 2], [0], [1], [2])]
    G = load(doc(edges=edges))
    assert [e.level for e in G.edges] == [2, 2, 2, 1, 1, 1]
    assert [e.id for e in G.edges] == list(range(6))


def test_load_empty():
    G = load(doc(n=0))
    assert G.n == 0 and G.m == 0


@pytest.mark.parametrize(
    "bad, message",
    [
        (doc(ell=[3, 0]), "ell not strictly increasing"),
        (doc(ell=[1, 1]), "ell not strictly increasing"),
        (doc(edges=[{"vertices": [0, 3]}]), "outside"),
        (doc(edges=[{"vertices": [1, 1]}]), "repeats"),
        (doc(edges=[{"vertices": []}]), "no vertices"),
        (doc(grading="explicit", edges=[{"vertices": [0], "level": 3}]), "out of range"),
        (doc(grading="explicit", edges=[{"vertices": [0]}]), "needs a level"),
        (doc(edges=[{"id": 4, "vertices": [0]}, {"id": 4, "vertices": [1]}]), "duplicate"),
        (doc(k=0), "positive"),
        (doc(grading="weird"), "unknown grading"),
        ("{not json", "malformed"),
        ("[]", "object"),
    ],
)
def test_load_errors(bad, message):
    with pytest.raises(HypergraphError, match=message):
        load(bad)


def test_standard_mode_ignores_levels(caplog):
    with caplog.at_level(logging.WARNING):
        G = load(doc(edges=[{"vertices": [0, 1], "level": 1}, {"vertices": [2]}]))
    assert [e.level for e in G.edges] == [2, 1]
    assert "ignored 1 supplied edge level" in caplog.text


def test_weak_chain_warns(caplog):
    with caplog.at_level(logging.WARNING):
        load(doc(edges=[{"vertices": [0, 1]}]))
    assert "not strictly decreasing" in caplog.text


def test_large_ell_warns_but_loads(caplog):
    with caplog.at_level(logging.WARNING):
        G = load(doc(k=1, ell=[1, 2], edges=[{"vertices": [0]}]))
    assert G.m == 1
    assert "dependent" in caplog.text


def test_restrict_to_level(pinned_triangle):
    top = restrict_to_level(pinned_triangle, 2)
    assert [e.id for e in top.edges] == [0, 1, 2]
    assert all(e.dimension == 2 for e in top.edges)
    assert top.n == 3
    assert top.ell == (3,) and top.k == 2
    assert restrict_to_level(pinned_triangle, 1) is pinned_triangle


def test_restrict_empty():
    G = build(0, [], 2, [0, 3])
    assert restrict_to_level(G, 2).m == 0


def test_restrict_out_of_range(pinned_triangle):
    with pytest.raises(HypergraphError):
        restrict_to_level(pinned_triangle, 3)
    with pytest.raises(HypergraphError):
        restrict_to_level(pinned_triangle, 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_restrict_nested_chain(seed, explicit):
    G = random_instance(random.Random(seed), explicit=explicit, dims=(1, 2, 3))
    for i in range(1, G.s):
        upper = {e.id for e in restrict_to_level(G, i + 1).edges}
        lower = {e.id for e in restrict_to_level(G, i).edges}
        assert upper <= lower
    for i in range(1, G.s + 1):
        ids = {e.id for e in restrict_to_level(G, i).edges}
        assert ids == {e.id for e in G.edges if e.level >= i}
        if G.mode is GradingMode.STANDARD:
            assert ids == {e.id for e in G.edges if e.dimension >= i}


def test_span():
    assert span([make_edge(0, (0, 1)), make_edge(1, (0,))]) == {0, 1}
    assert span([]) == frozenset()
    assert span([make_edge(0, (2,))]) == {2}


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans(), st.booleans())
def test_round_trip(seed, explicit, weights):
    G = random_instance(random.Random(seed), explicit=explicit, weights=weights)
    assert load(dumps(G)) == G


def test_serialization_order():
    G = load(doc(grading="explicit", edges=[
        {"id": 5, "vertices": [1, 0], "level": 2, "weight": 2.5},
        {"id": 1, "vertices": [2], "level": 1},
    ]))
    assert dumps(G) == (
        '{"n": 3, "k": 2, "ell": [0, 3], "grading": "explicit", "edges": ['
        '{"id": 1, "vertices": [2], "level": 1}, '
        '{"id": 5, "vertices": [0, 1], "level": 2, "weight": 2.5}]}'
    )
