import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedsparse import build
from gradedsparse.oracle import (
    InstanceTooLarge,
    bases_bf,
    circuits_bf,
    is_graded_sparse_bf,
    is_independent_bf,
    is_sparse_bf,
    rank_bf,
)

from .conftest import PINNED_TRIANGLE, random_instance

K4 = list(itertools.combinations(range(4), 2))


def test_is_sparse_bf_examples():
    assert is_sparse_bf([(0, 1), (1, 2), (0, 2)], 3, 2, 3)
    assert not is_sparse_bf(K4, 4, 2, 3)
    assert is_sparse_bf([], 4, 2, 3)
    # a lone loop under l >= k is dependent
    assert not is_sparse_bf([(0,)], 1, 2, 2)


def test_is_sparse_bf_guard():
    with pytest.raises(InstanceTooLarge):
        is_sparse_bf([], 13, 1, 0)


def test_graded_sparse_examples(pinned_triangle, path_two_loops):
    assert is_graded_sparse_bf(pinned_triangle)
    assert not is_graded_sparse_bf(path_two_loops)
    for d in (1, 2, 3):
        for k in (1, 2):
            for ell1 in range(0, k * d):
                G = build(3, [tuple(range(d))], k, [ell1])
                assert is_graded_sparse_bf(G)


def test_rank_and_bases(pinned_triangle, path_two_loops):
    assert rank_bf(pinned_triangle) == 6
    assert frozenset(range(6)) in bases_bf(pinned_triangle)
    assert rank_bf(path_two_loops) == 3
    # the four edges form one circuit, so every 3-subset is a basis
    assert sorted(sorted(b) for b in bases_bf(path_two_loops)) == [
        [0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]
    ]
    assert rank_bf(build(3, [], 2, [0, 3])) == 0


def test_rank_guard():
    G = build(2, [(0,)] * 21, 1, [0])
    with pytest.raises(InstanceTooLarge):
        rank_bf(G)


def test_circuit_examples(path_two_loops):
    assert [set(c.edge_ids) for c in circuits_bf(path_two_loops)] == [{0, 1, 2, 3}]
    cycle = build(3, [(0, 1), (1, 2), (0, 2)], 1, [0, 1])
    assert [set(c.edge_ids) for c in circuits_bf(cycle)] == [{0, 1, 2}]
    assert circuits_bf(build(3, PINNED_TRIANGLE, 2, [0, 3])) == []


def minimal_dependent(edges, n, k, ell):
    """(k, l)-circuits among ``edges`` (id -> vertices) by subset enumeration."""
    ids = sorted(edges)
    out = []
    for size in range(1, len(ids) + 1):
        for combo in itertools.combinations(ids, size):
            s = set(combo)
            if any(c <= s for c in out):
                continue
            if not is_sparse_bf([edges[i] for i in combo], n, k, ell):
                out.append(frozenset(combo))
    return out


def recursive_circuit_family(G):
    """The level-by-level circuit family: keep level-i circuits avoiding deeper ones."""
    family: list[frozenset] = []
    for i in range(G.s, 0, -1):
        edges = {e.id: e.vertices for e in G.edges if e.level >= i}
        deeper = list(family)
        for c in minimal_dependent(edges, G.n, G.k, G.ell[i - 1]):
            if not any(d <= c for d in deeper):
                family.append(c)
    return family


def circuit_level(G, C):
    best = 0
    for j in range(1, G.s + 1):
        if all(G.edge(i).level >= j for i in C):
            if not is_sparse_bf([G.edge(i).vertices for i in C], G.n, G.k, G.ell[j - 1]):
                best = j
    return best


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_circuits_match_recursive_family(seed, explicit):
    G = random_instance(random.Random(seed), n_max=4, m_max=7, dims=(1, 2, 3), explicit=explicit)
    got = {c.edge_ids for c in circuits_bf(G)}
    assert got == set(recursive_circuit_family(G))
    # circuit-free exactly when graded sparse
    assert (not got) == is_graded_sparse_bf(G)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_circuits_are_minimal_and_satisfy_axioms(seed, explicit):
    G = random_instance(random.Random(seed), n_max=4, m_max=7, dims=(1, 2, 3), explicit=explicit)
    circuits = [c.edge_ids for c in circuits_bf(G)]
    for C in circuits:
        assert not is_independent_bf(G, C)
        for y in C:
            assert is_independent_bf(G, C - {y})
    for A, B in itertools.permutations(circuits, 2):
        assert not A <= B
        for y in A & B:
            assert not is_independent_bf(G, (A | B) - {y})


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_circuit_dimension_bound(seed, explicit):
    G = random_instance(random.Random(seed), n_max=4, m_max=7, dims=(1, 2, 3), explicit=explicit)
    for c in circuits_bf(G):
        top = circuit_level(G, c.edge_ids)
        assert top >= 1
        dims = [G.edge(i).dimension for i in c.edge_ids]
        for i in range(1, top + 1):
            ell = G.ell[i - 1]
            d = ell // G.k + 1  # (d-1)k <= ell < dk
            assert len(dims) == 1 or min(dims) >= d
