"""Extraction of maximum graded sparse subgraphs and the problems built on it.

The extractor runs one (k, l_1) pebble game over all accepted edges.  An
edge of level L must pass L checks: gathering l_1 + 1 pebbles in the main
game, then for d = 1 .. L-1 gathering l_{d+1} + 1 pebbles in a shadow copy
from which every accepted edge of level <= d has been removed (each
removal returns its pebble to the tail).  The stage-d shadow therefore
holds exactly the accepted part of G_{>=d+1}.  Shadows are scratch space;
only the main game is ever extended.
"""
from __future__ import annotations

import enum
import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from numbers import Real
from typing import Iterable, Iterator, Sequence

from .hypergraph import (
    Edge,
    GradedHypergraph,
    GradingMode,
    HypergraphError,
    edge_to_dict,
    json_number,
    make_edge,
    standard_level,
)
from .pebble_game import PebbleGame

class Status(str, enum.Enum):
    TIGHT = "graded-tight"
    SPARSE = "graded-sparse"
    NOT_SPARSE = "not-sparse"


class NotGradedSparse(ValueError):
    pass


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    edge_ids: frozenset[int]

    def to_dict(self) -> dict:
        return {"vertices": sorted(self.vertices), "edge_ids": sorted(self.edge_ids)}


@dataclass
class SolveReport:
    problem: str
    status: Status
    n: int
    m: int
    k: int
    ell: tuple[int, ...]
    accepted: list[int] | None = None
    rejected: list[int] | None = None
    witness: int | None = None
    is_graded_sparse: bool = False
    is_tight: bool = False
    is_spanning: bool | None = None
    components: list[Component] | None = None
    total_weight: Real | None = None
    added_edges: list[Edge] | None = None

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "status": self.status.value,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "ell": list(self.ell),
            "accepted": self.accepted,
            "rejected": self.rejected,
            "witness": self.witness,
            "is_graded_sparse": self.is_graded_sparse,
            "is_tight": self.is_tight,
            "is_spanning": self.is_spanning,
            "components": None if self.components is None else [c.to_dict() for c in self.components],
            "total_weight": None if self.total_weight is None else json_number(self.total_weight),
            "added_edges": None
            if self.added_edges is None
            else [edge_to_dict(e, GradingMode.EXPLICIT) for e in self.added_edges],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> SolveReport:
        comps = doc.get("components")
        added = doc.get("added_edges")
        return cls(
            problem=doc["problem"],
            status=Status(doc["status"]),
            n=doc["n"],
            m=doc["m"],
            k=doc["k"],
            ell=tuple(doc["ell"]),
            accepted=doc.get("accepted"),
            rejected=doc.get("rejected"),
            witness=doc.get("witness"),
            is_graded_sparse=doc["is_graded_sparse"],
            is_tight=doc["is_tight"],
            is_spanning=doc.get("is_spanning"),
            components=None
            if comps is None
            else [Component(frozenset(c["vertices"]), frozenset(c["edge_ids"])) for c in comps],
            total_weight=doc.get("total_weight"),
            added_edges=None
            if added is None
            else [make_edge(e["id"], e["vertices"], e["level"], e.get("weight", 1)) for e in added],
        )


class GradedExtractor:
    """Incremental independence test for the graded sparsity matroid."""

    def __init__(self, n: int, k: int, ell: Sequence[int]):
        self.k = k
        self.ell = tuple(ell)
        self.game = PebbleGame(n, k)
        self.by_level: dict[int, list[int]] = defaultdict(list)
        self.accepted: list[int] = []

    def offer(self, e: Edge) -> bool:
        """Accept ``e`` iff the accepted edges plus ``e`` stay graded sparse."""
        ell = self.ell
        if not self.game.collect(e.vertices, ell[0] + 1).success:
            return False
        if e.level > 1:
            shadow = self.game.shadow(self.by_level[1])
            for d in range(1, e.level):
                if d > 1:
                    shadow.remove(self.by_level[d])
                if not shadow.collect(e.vertices, ell[d] + 1).success:
                    return False
        self.game.cover(e.id, e.vertices)
        self.by_level[e.level].append(e.id)
        self.accepted.append(e.id)
        return True


def _basis_size(G: GradedHypergraph) -> int:
    return G.k * G.n - G.ell[0]


def _run(G: GradedHypergraph, edges: Iterable[Edge]) -> tuple[GradedExtractor, list[int]]:
    ex = GradedExtractor(G.n, G.k, G.ell)
    rejected = []
    for e in edges:
        if not ex.offer(e):
            rejected.append(e.id)
    return ex, rejected


def _report(problem: str, G: GradedHypergraph, ex: GradedExtractor, rejected: list[int]) -> SolveReport:
    sparse = not rejected
    tight = sparse and G.m == _basis_size(G)
    return SolveReport(
        problem=problem,
        status=Status.TIGHT if tight else Status.SPARSE if sparse else Status.NOT_SPARSE,
        n=G.n,
        m=G.m,
        k=G.k,
        ell=G.ell,
        accepted=list(ex.accepted),
        rejected=rejected,
        witness=rejected[0] if rejected else None,
        is_graded_sparse=sparse,
        is_tight=tight,
        is_spanning=len(ex.accepted) == _basis_size(G),
        total_weight=sum((G.edge(i).weight for i in ex.accepted), 0),
    )


def extract(G: GradedHypergraph) -> SolveReport:
    """A maximum-size graded sparse subgraph, edges considered in input order."""
    ex, rejected = _run(G, G.edges)
    return _report("extract", G, ex, rejected)


def level_counts_ok(G: GradedHypergraph) -> bool:
    counts = [0] * (G.s + 2)
    for e in G.edges:
        counts[e.level] += 1
    at_least = 0
    for i in range(G.s, 0, -1):
        at_least += counts[i]
        if at_least > max(0, G.k * G.n - G.ell[i - 1]):
            return False
    return True


def decide(G: GradedHypergraph) -> SolveReport:
    """Graded sparse / tight / not sparse, with the first rejected edge as witness.

    Extraction stops at the first rejection.  When the level counts already
    fail, that rejection is guaranteed within the first k*n - l_i + 1 edges
    of the offending level, which keeps the run short.
    """
    counts_ok = level_counts_ok(G)
    ex = GradedExtractor(G.n, G.k, G.ell)
    witness = None
    for e in G.edges:
        if not ex.offer(e):
            witness = e.id
            break
    assert witness is not None or counts_ok
    sparse = witness is None
    tight = sparse and G.m == _basis_size(G)
    return SolveReport(
        problem="decide",
        status=Status.TIGHT if tight else Status.SPARSE if sparse else Status.NOT_SPARSE,
        n=G.n,
        m=G.m,
        k=G.k,
        ell=G.ell,
        witness=witness,
        is_graded_sparse=sparse,
        is_tight=tight,
    )


def spanning(G: GradedHypergraph) -> bool:
    """Whether G contains a graded tight spanning subgraph."""
    ex, _ = _run(G, G.edges)
    return len(ex.accepted) == _basis_size(G)


def span_report(G: GradedHypergraph) -> SolveReport:
    ex, rejected = _run(G, G.edges)
    return _report("span", G, ex, rejected)


def optimize(G: GradedHypergraph) -> SolveReport:
    """Maximum-weight basis: extraction over edges sorted by weight, heaviest first.

    The sort is stable, so equal weights keep input order.
    """
    order = sorted(G.edges, key=lambda e: -e.weight)
    ex, rejected = _run(G, order)
    return _report("optimize", G, ex, rejected)


# -- components -------------------------------------------------------------

def _component_of(game: PebbleGame, vertices: tuple[int, ...], ell1: int, incidence) -> frozenset[int] | None:
    """Vertex set of the maximal connected (k, l_1)-tight subgraph holding an edge.

    ``game`` is a scratch copy; it is reoriented in place.  Returns None when
    l_1 + 1 pebbles can be gathered on the edge, i.e. no tight set holds it.

    After a failed gather the targets hold exactly l_1 pebbles.  A vertex
    from which no free pebble outside the targets is reachable lies in a
    closed, pebble-free region; the component is the part of that region
    connected to the targets through edges tailed inside it.
    """
    got = game.collect(vertices, ell1 + 1)
    if got.success:
        return None
    targets = set(vertices)
    # vertices that can reach a free pebble, found by walking edges backwards
    live = {v for v in range(game.n) if v not in targets and game.pebbles[v] > 0}
    queue = deque(live)
    while queue:
        w = queue.popleft()
        for e in incidence[w]:
            t = game.tail(e)
            if t != w and t not in live:
                live.add(t)
                queue.append(t)
    comp = set(got.reach)
    queue = deque(comp)
    while queue:
        x = queue.popleft()
        for e in incidence[x]:
            t = game.tail(e)
            if t in live:
                continue
            for y in (t, *game.vertices_of(e)):
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
    return frozenset(comp)


def find_components(G: GradedHypergraph, accepted: Sequence[int], game: PebbleGame) -> list[Component]:
    scratch = game.copy()
    incidence: list[list[int]] = [[] for _ in range(G.n)]
    for e in accepted:
        for v in G.edge(e).vertices:
            incidence[v].append(e)
    covered: set[int] = set()
    found = []
    for e in accepted:
        if e in covered:
            continue
        verts = _component_of(scratch, G.edge(e).vertices, G.ell[0], incidence)
        if verts is None:
            continue
        ids = frozenset(i for i in accepted if set(G.edge(i).vertices) <= verts)
        covered |= ids
        found.append(Component(verts, ids))
    return sorted(found, key=lambda c: min(c.vertices))


def components(G: GradedHypergraph) -> list[Component]:
    """Maximal connected (k, l_1)-tight subgraphs of an extracted basis of G."""
    ex, _ = _run(G, G.edges)
    return find_components(G, ex.accepted, ex.game)


def components_report(G: GradedHypergraph) -> SolveReport:
    ex, rejected = _run(G, G.edges)
    rep = _report("components", G, ex, rejected)
    rep.components = find_components(G, ex.accepted, ex.game)
    return rep


# -- extension --------------------------------------------------------------

def standard_candidates(G: GradedHypergraph, first_id: int) -> Iterator[Edge]:
    """Edges of the complete hypergraph with dimensions 1..s, each d-set repeated d*k times.

    Ordered by dimension, then vertex tuple, then copy index.
    """
    ids = itertools.count(first_id)
    for d in range(1, G.s + 1):
        level = standard_level(d, G.s)
        for verts in itertools.combinations(range(G.n), d):
            for _ in range(d * G.k):
                yield Edge(next(ids), verts, level, 1)


def extend(G: GradedHypergraph, candidates: Sequence[Edge] | None = None) -> SolveReport:
    """Add a minimum number of edges to a graded sparse G to reach a basis.

    G's edges are offered first, then the candidates in the given order.
    Flags in the report describe the extended graph.
    """
    if not decide(G).is_graded_sparse:
        raise NotGradedSparse("input is not graded sparse")
    next_id = max((e.id for e in G.edges), default=-1) + 1
    if candidates is None:
        if G.mode is GradingMode.EXPLICIT:
            raise HypergraphError("explicit grading: candidate edges must be supplied")
        pool: Iterable[Edge] = standard_candidates(G, next_id)
    else:
        pool = _check_candidates(G, candidates)

    ex, rejected = _run(G, G.edges)
    assert not rejected
    target = _basis_size(G)
    added = []
    dead: set[tuple] = set()
    for e in pool:
        if len(ex.accepted) >= target:
            break
        key = (e.vertices, e.level)
        if key in dead:
            continue
        if ex.offer(e):
            added.append(e)
        else:
            dead.add(key)
    size = len(ex.accepted)
    tight = size == target
    return SolveReport(
        problem="extend",
        status=Status.TIGHT if tight else Status.SPARSE,
        n=G.n,
        m=G.m,
        k=G.k,
        ell=G.ell,
        accepted=list(ex.accepted),
        rejected=[],
        is_graded_sparse=True,
        is_tight=tight,
        is_spanning=tight,
        total_weight=sum((e.weight for e in (*G.edges, *added)), 0),
        added_edges=added,
    )


def _check_candidates(G: GradedHypergraph, candidates: Sequence[Edge]) -> list[Edge]:
    taken = {e.id for e in G.edges}
    out = []
    for e in candidates:
        if e.id in taken:
            raise HypergraphError(f"candidate id {e.id} clashes with an existing edge")
        taken.add(e.id)
        if not e.vertices or len(set(e.vertices)) != len(e.vertices):
            raise HypergraphError(f"candidate {e.id} has empty or repeated vertices")
        if any(v < 0 or v >= G.n for v in e.vertices):
            raise HypergraphError(f"candidate {e.id} has a vertex outside [0, {G.n})")
        level = standard_level(len(e.vertices), G.s) if G.mode is GradingMode.STANDARD else e.level
        if not 1 <= level <= G.s:
            raise HypergraphError(f"candidate {e.id} level {level} out of range")
        out.append(make_edge(e.id, e.vertices, level, e.weight))
    return out
