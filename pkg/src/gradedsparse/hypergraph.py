"""Graded hypergraphs: edges, gradings, sparsity parameters, JSON I/O."""
from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field, replace
from numbers import Real
from typing import Any, Iterable, Sequence

log = logging.getLogger(__name__)


class HypergraphError(ValueError):
    """Raised for malformed or inconsistent hypergraph input."""


class GradingMode(str, enum.Enum):
    STANDARD = "standard"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Edge:
    id: int
    vertices: tuple[int, ...]
    level: int = 1
    weight: Real = 1

    @property
    def dimension(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SparsityParams:
    k: int
    ell: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise HypergraphError(f"k must be a positive integer, got {self.k!r}")
        if not self.ell:
            raise HypergraphError("ell must have at least one entry")
        if any(not isinstance(x, int) or x < 0 for x in self.ell):
            raise HypergraphError("ell entries must be non-negative integers")
        if any(a >= b for a, b in zip(self.ell, self.ell[1:])):
            raise HypergraphError("ell not strictly increasing")

    @property
    def s(self) -> int:
        return len(self.ell)


@dataclass(frozen=True)
class GradedHypergraph:
    n: int
    edges: tuple[Edge, ...]
    params: SparsityParams
    mode: GradingMode = GradingMode.STANDARD
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise HypergraphError(f"n must be a non-negative integer, got {self.n!r}")
        s = self.params.s
        by_id = {}
        for e in self.edges:
            if e.id in by_id:
                raise HypergraphError(f"duplicate edge id {e.id}")
            if not e.vertices:
                raise HypergraphError(f"edge {e.id} has no vertices")
            if len(set(e.vertices)) != len(e.vertices):
                raise HypergraphError(f"edge {e.id} repeats a vertex")
            if any(v < 0 or v >= self.n for v in e.vertices):
                raise HypergraphError(f"edge {e.id} has a vertex id outside [0, {self.n})")
            if not 1 <= e.level <= s:
                raise HypergraphError(f"edge {e.id} level {e.level} out of range [1, {s}]")
            by_id[e.id] = e
        object.__setattr__(self, "_by_id", by_id)

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def ell(self) -> tuple[int, ...]:
        return self.params.ell

    @property
    def s(self) -> int:
        return self.params.s

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, edge_id: int) -> Edge:
        return self._by_id[edge_id]

    def with_edges(self, edges: Iterable[Edge]) -> GradedHypergraph:
        """Same vertex set, parameters and grading with a different edge list."""
        return replace(self, edges=tuple(edges))


def standard_level(dimension: int, s: int) -> int:
    return min(dimension, s)


def make_edge(edge_id, vertices, level=1, weight=1) -> Edge:
    return Edge(id=edge_id, vertices=tuple(sorted(vertices)), level=level, weight=weight)


def build(
    n: int,
    edges: Sequence[Sequence[int]],
    k: int,
    ell: Sequence[int],
    *,
    mode: GradingMode | str = GradingMode.STANDARD,
    levels: Sequence[int] | None = None,
    weights: Sequence[Real] | None = None,
) -> GradedHypergraph:
    """Convenience constructor from plain vertex lists; edge ids are positions."""
    mode = GradingMode(mode)
    params = SparsityParams(k, tuple(ell))
    recs = []
    for i, verts in enumerate(edges):
        if mode is GradingMode.STANDARD:
            level = standard_level(len(verts), params.s)
        else:
            if levels is None:
                raise HypergraphError("explicit grading needs levels")
            level = levels[i]
        weight = 1 if weights is None else weights[i]
        if len(set(verts)) != len(verts):
            raise HypergraphError(f"edge {i} repeats a vertex")
        recs.append(make_edge(i, verts, level, weight))
    return GradedHypergraph(n, tuple(recs), params, mode)


def restrict_to_level(G: GradedHypergraph, i: int) -> GradedHypergraph:
    """The subgraph G_{>=i}: edges of level at least ``i`` on the same vertices.

    The result is itself a graded hypergraph whose first level is ``i``:
    levels are shifted down by ``i - 1`` and ``ell`` becomes ``ell[i-1:]``,
    so its level-1 parameters are ``(k, ell_i)``.  For ``i > 1`` the grading
    is recorded as explicit because the shifted levels no longer follow the
    dimension rule.
    """
    if not 1 <= i <= G.s:
        raise HypergraphError(f"level {i} out of range [1, {G.s}]")
    if i == 1:
        return G
    shift = i - 1
    edges = tuple(replace(e, level=e.level - shift) for e in G.edges if e.level >= i)
    params = SparsityParams(G.k, G.ell[shift:])
    return GradedHypergraph(G.n, edges, params, GradingMode.EXPLICIT)


def span(edges: Iterable[Edge]) -> frozenset[int]:
    out: set[int] = set()
    for e in edges:
        out.update(e.vertices)
    return frozenset(out)


def _check_chain(G: GradedHypergraph) -> None:
    if not G.edges:
        return
    present = {e.level for e in G.edges}
    missing = [i for i in range(1, G.s + 1) if i not in present]
    if missing:
        log.warning("grading chain is not strictly decreasing: no edges at level(s) %s", missing)
    for i in range(1, G.s + 1):
        dims = [e.dimension for e in G.edges if e.level >= i]
        if dims and G.ell[i - 1] >= G.k * min(dims):
            log.warning(
                "ell_%d = %d >= k * %d: every %d-edge at level >= %d is dependent",
                i, G.ell[i - 1], min(dims), min(dims), i,
            )


# -- JSON -------------------------------------------------------------------

def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise HypergraphError(f"{what} must be an integer, got {value!r}")
    return value


def from_dict(doc: Any, *, k=None, ell=None, grading=None) -> GradedHypergraph:
    """Validate a decoded JSON document.  Keyword overrides replace document fields."""
    if not isinstance(doc, dict):
        raise HypergraphError("document must be a JSON object")
    n = _require_int(doc.get("n"), "n")
    k = _require_int(doc.get("k") if k is None else k, "k")
    raw_ell = doc.get("ell") if ell is None else ell
    if not isinstance(raw_ell, list) or not raw_ell:
        raise HypergraphError("ell must be a non-empty list of integers")
    params = SparsityParams(k, tuple(_require_int(x, "ell entry") for x in raw_ell))
    try:
        mode = GradingMode(doc.get("grading", "standard") if grading is None else grading)
    except ValueError:
        raise HypergraphError(f"unknown grading {doc.get('grading')!r}") from None

    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise HypergraphError("edges must be a list")
    edges = []
    ignored_levels = 0
    for pos, rec in enumerate(raw_edges):
        if not isinstance(rec, dict):
            raise HypergraphError(f"edge at position {pos} must be an object")
        edge_id = _require_int(rec.get("id", pos), f"edge {pos} id")
        verts = rec.get("vertices")
        if not isinstance(verts, list):
            raise HypergraphError(f"edge {edge_id} vertices must be a list")
        verts = [_require_int(v, f"edge {edge_id} vertex") for v in verts]
        if len(set(verts)) != len(verts):
            raise HypergraphError(f"edge {edge_id} repeats a vertex")
        if mode is GradingMode.STANDARD:
            if "level" in rec:
                ignored_levels += 1
            level = standard_level(len(verts), params.s)
        else:
            if "level" not in rec:
                raise HypergraphError(f"edge {edge_id} needs a level under explicit grading")
            level = _require_int(rec["level"], f"edge {edge_id} level")
        weight = rec.get("weight", 1)
        if isinstance(weight, bool) or not isinstance(weight, (int, float)):
            raise HypergraphError(f"edge {edge_id} weight must be a number")
        edges.append(make_edge(edge_id, verts, level, weight))
    if ignored_levels:
        log.warning("standard grading: ignored %d supplied edge level(s)", ignored_levels)
    G = GradedHypergraph(n, tuple(edges), params, mode)
    _check_chain(G)
    return G


def load(data: bytes | str, **overrides) -> GradedHypergraph:
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise HypergraphError(f"malformed JSON: {exc}") from None
    return from_dict(doc, **overrides)


def edge_to_dict(e: Edge, mode: GradingMode) -> dict:
    rec: dict[str, Any] = {"id": e.id, "vertices": list(e.vertices)}
    if mode is GradingMode.EXPLICIT:
        rec["level"] = e.level
    if e.weight != 1:
        rec["weight"] = json_number(e.weight)
    return rec


def to_dict(G: GradedHypergraph) -> dict:
    return {
        "n": G.n,
        "k": G.k,
        "ell": list(G.ell),
        "grading": G.mode.value,
        "edges": [edge_to_dict(e, G.mode) for e in sorted(G.edges, key=lambda e: e.id)],
    }


def dumps(G: GradedHypergraph) -> str:
    return json.dumps(to_dict(G))


def json_number(x: Real) -> int | float:
    if isinstance(x, int):
        return x
    if float(x).is_integer() and not isinstance(x, float):
        return int(x)
    return float(x)
