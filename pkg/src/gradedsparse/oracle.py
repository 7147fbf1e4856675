"""Brute-force reference answers for small instances.

Everything here enumerates subsets and shares no code with the pebble
game, so it can be used to check it.  Size guards are hard errors: these
functions are test equipment.

Sparsity is checked over vertex subsets rather than edge subsets.  For a
vertex set V', the worst edge-induced subgraph spanning inside V' takes
every edge contained in V', and its span is no larger than V', so
``count(V') <= max(0, k|V'| - l)`` for all V' is equivalent to the
edge-induced definition.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .hypergraph import Edge, GradedHypergraph

MAX_VERTICES = 12
MAX_RANK_EDGES = 20
MAX_CIRCUIT_EDGES = 16


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CircuitWitness:
    edge_ids: frozenset[int]


def _vmask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def is_sparse_bf(edges: Iterable, n: int, k: int, ell: int) -> bool:
    """(k, ell)-sparsity of a multiset of edges given as vertex collections or Edges."""
    if n > MAX_VERTICES:
        raise InstanceTooLarge(f"n={n} exceeds {MAX_VERTICES}")
    masks = [_vmask(e.vertices if isinstance(e, Edge) else e) for e in edges]
    support = 0
    for em in masks:
        support |= em
    for sub in _submasks(support):
        inside = sum(1 for em in masks if em & ~sub == 0)
        if inside > max(0, k * sub.bit_count() - ell):
            return False
    return True


def is_graded_sparse_bf(G: GradedHypergraph) -> bool:
    return all(
        is_sparse_bf([e for e in G.edges if e.level >= i], G.n, G.k, G.ell[i - 1])
        for i in range(1, G.s + 1)
    )


class _Table:
    """Per level and vertex subset, the bitmask of edges (by position) inside it.

    An edge subset S (bitmask over positions) is independent iff
    ``popcount(S & inside) <= bound`` for every row.
    """

    def __init__(self, G: GradedHypergraph, max_edges: int):
        if G.n > MAX_VERTICES:
            raise InstanceTooLarge(f"n={G.n} exceeds {MAX_VERTICES}")
        if G.m > max_edges:
            raise InstanceTooLarge(f"m={G.m} exceeds {max_edges}")
        self.G = G
        vm = [_vmask(e.vertices) for e in G.edges]
        support = 0
        for em in vm:
            support |= em
        rows = set()
        for i in range(1, G.s + 1):
            level_bits = 0
            for pos, e in enumerate(G.edges):
                if e.level >= i:
                    level_bits |= 1 << pos
            for sub in _submasks(support):
                inside = 0
                for pos, em in enumerate(vm):
                    if em & ~sub == 0:
                        inside |= 1 << pos
                inside &= level_bits
                if inside:
                    bound = max(0, G.k * sub.bit_count() - G.ell[i - 1])
                    rows.add((inside, bound))
        # rows that can never bind are dropped
        self.rows = [(m, b) for m, b in rows if m.bit_count() > b]

    def independent(self, S: int) -> bool:
        for inside, bound in self.rows:
            if (S & inside).bit_count() > bound:
                return False
        return True

    def ids(self, S: int) -> frozenset[int]:
        return frozenset(e.id for pos, e in enumerate(self.G.edges) if S >> pos & 1)

    def independent_sets(self) -> list[int]:
        """All independent subsets as position bitmasks (hereditary DFS)."""
        m = self.G.m
        out = []

        def grow(S: int, start: int) -> None:
            out.append(S)
            for pos in range(start, m):
                T = S | 1 << pos
                if self.independent(T):
                    grow(T, pos + 1)

        grow(0, 0)
        return out


def is_independent_bf(G: GradedHypergraph, edge_ids: Iterable[int]) -> bool:
    keep = set(edge_ids)
    return is_graded_sparse_bf(G.with_edges(e for e in G.edges if e.id in keep))


def rank_bf(G: GradedHypergraph) -> int:
    table = _Table(G, MAX_RANK_EDGES)
    m = G.m
    best = 0

    def grow(S: int, size: int, start: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (m - start) <= best:
            return
        for pos in range(start, m):
            T = S | 1 << pos
            if table.independent(T):
                grow(T, size + 1, pos + 1)

    grow(0, 0, 0)
    return best


def independent_sets_bf(G: GradedHypergraph) -> list[frozenset[int]]:
    table = _Table(G, MAX_RANK_EDGES)
    return [table.ids(S) for S in table.independent_sets()]


def bases_bf(G: GradedHypergraph) -> list[frozenset[int]]:
    table = _Table(G, MAX_RANK_EDGES)
    sets = table.independent_sets()
    r = max(S.bit_count() for S in sets)
    return [table.ids(S) for S in sets if S.bit_count() == r]


def max_weight_basis_bf(G: GradedHypergraph):
    """Largest total weight over all bases; weights are summed exactly as given."""
    return max(sum((G.edge(i).weight for i in B), 0) for B in bases_bf(G))


def circuits_bf(G: GradedHypergraph) -> list[CircuitWitness]:
    """All minimal dependent edge subsets, smallest first."""
    table = _Table(G, MAX_CIRCUIT_EDGES)
    found: list[int] = []
    for size in range(1, G.m + 1):
        for combo in combinations(range(G.m), size):
            S = 0
            for pos in combo:
                S |= 1 << pos
            if any(C & S == C for C in found):
                continue
            if not table.independent(S):
                found.append(S)
    return [CircuitWitness(table.ids(S)) for S in found]


def components_bf(G: GradedHypergraph, edge_ids: Sequence[int] | None = None):
    """Maximal connected (k, l_1)-tight edge-induced subgraphs of a sparse edge set.

    Returns ``(vertices, edge_ids)`` pairs sorted by least vertex.  A vertex
    set counts when it equals the span of its induced edges, holds exactly
    ``k|V'| - l_1`` of them, and those edges form a connected hypergraph.
    """
    if G.n > MAX_VERTICES:
        raise InstanceTooLarge(f"n={G.n} exceeds {MAX_VERTICES}")
    keep = set(e.id for e in G.edges) if edge_ids is None else set(edge_ids)
    edges = [e for e in G.edges if e.id in keep]
    vm = [(_vmask(e.vertices), e.id) for e in edges]
    support = 0
    for em, _ in vm:
        support |= em
    tight = []
    for sub in _submasks(support):
        inside = [(em, i) for em, i in vm if em & ~sub == 0]
        if not inside or len(inside) != G.k * sub.bit_count() - G.ell[0]:
            continue
        covered = 0
        for em, _ in inside:
            covered |= em
        if covered != sub or not _connected([em for em, _ in inside]):
            continue
        tight.append((sub, frozenset(i for _, i in inside)))
    maximal = [t for t in tight if not any(t[0] != u[0] and t[0] & ~u[0] == 0 for u in tight)]
    out = [
        (frozenset(v for v in range(G.n) if sub >> v & 1), ids) for sub, ids in maximal
    ]
    return sorted(out, key=lambda c: min(c[0]))


def _connected(masks: list[int]) -> bool:
    reach = masks[0]
    changed = True
    while changed:
        changed = False
        for em in masks:
            if em & reach and em & ~reach:
                reach |= em
                changed = True
    return all(em & reach for em in masks)
