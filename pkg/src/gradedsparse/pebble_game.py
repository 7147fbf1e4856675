"""The (k, l) pebble game on hypergraphs.

Every vertex starts with ``k`` pebbles.  An accepted edge is covered by one
pebble taken from an endpoint, its *tail*; the edge points from the tail to
its other endpoints.  Pebbles travel back along directed paths by
re-tailing edges, which is how pebbles are gathered onto a target set.

Throughout, ``pebbles[v] + outdegree(v) == k`` for every vertex, hence
``sum(pebbles) + len(placed) == k * n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class PlacedEdge:
    edge_id: int
    vertices: tuple[int, ...]
    tail: int


@dataclass(frozen=True)
class Collection:
    success: bool
    reach: frozenset[int]


class PebbleGame:
    def __init__(self, n: int, k: int):
        if n < 0 or k < 1:
            raise ValueError("need n >= 0 and k >= 1")
        self.n = n
        self.k = k
        self.pebbles = [k] * n
        self._members: dict[int, tuple[int, ...]] = {}
        self._tail: dict[int, int] = {}
        self._out: list[set[int]] = [set() for _ in range(n)]

    # -- inspection ---------------------------------------------------------

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self._tail

    def __len__(self) -> int:
        return len(self._tail)

    def tail(self, edge_id: int) -> int:
        return self._tail[edge_id]

    def placed(self) -> list[PlacedEdge]:
        return [PlacedEdge(e, self._members[e], t) for e, t in self._tail.items()]

    def vertices_of(self, edge_id: int) -> tuple[int, ...]:
        return self._members[edge_id]

    def out_edges(self, v: int) -> list[int]:
        return sorted(self._out[v])

    def free(self, vertices: Iterable[int]) -> int:
        return sum(self.pebbles[v] for v in vertices)

    def check(self) -> None:
        """Assert the pebble/orientation invariants; used by tests."""
        assert sum(self.pebbles) + len(self._tail) == self.k * self.n
        for v in range(self.n):
            assert self.pebbles[v] >= 0
            assert self.pebbles[v] + len(self._out[v]) == self.k
            for e in self._out[v]:
                assert self._tail[e] == v
        for e, t in self._tail.items():
            assert t in self._members[e]

    # -- moves --------------------------------------------------------------

    def _retail(self, edge_id: int, new_tail: int) -> None:
        old = self._tail[edge_id]
        self._out[old].remove(edge_id)
        self._out[new_tail].add(edge_id)
        self._tail[edge_id] = new_tail

    def _find_free_pebble(self, targets: set[int]):
        """DFS from ``targets`` along out-edges for a pebble outside ``targets``.

        Returns ``(w, pred, visited)``; ``w`` is None if nothing is reachable.
        """
        visited = set(targets)
        pred: dict[int, tuple[int, int]] = {}
        stack = sorted(targets, reverse=True)
        while stack:
            v = stack.pop()
            for e in sorted(self._out[v]):
                for w in self._members[e]:
                    if w in visited:
                        continue
                    visited.add(w)
                    pred[w] = (e, v)
                    if self.pebbles[w] > 0:
                        return w, pred, visited
                    stack.append(w)
        return None, pred, visited

    def collect(self, targets: Iterable[int], goal: int) -> Collection:
        """Gather at least ``goal`` pebbles on ``targets`` by path reversals.

        Pebbles already on ``targets`` never leave them.  On failure the
        state holds the most pebbles reachable and ``reach`` is the set of
        vertices searched; no edge tailed inside it leaves it.
        """
        tset = set(targets)
        if not tset:
            raise ValueError("targets must be nonempty")
        have = self.free(tset)
        while have < goal:
            w, pred, visited = self._find_free_pebble(tset)
            if w is None:
                return Collection(False, frozenset(visited))
            self.pebbles[w] -= 1
            cur = w
            while cur not in tset:
                e, prev = pred[cur]
                self._retail(e, cur)
                cur = prev
            self.pebbles[cur] += 1
            have += 1
        return Collection(True, frozenset(tset))

    def cover(self, edge_id: int, vertices: Iterable[int]) -> int:
        """Place an edge using a pebble already on one of its endpoints.

        The tail is the endpoint holding the most pebbles, lowest id on ties.
        """
        verts = tuple(sorted(vertices))
        if edge_id in self._tail:
            raise ValueError(f"edge {edge_id} already placed")
        tail = max(verts, key=lambda v: (self.pebbles[v], -v))
        if self.pebbles[tail] == 0:
            raise ValueError(f"no pebble on the endpoints of edge {edge_id}")
        self.pebbles[tail] -= 1
        self._members[edge_id] = verts
        self._tail[edge_id] = tail
        self._out[tail].add(edge_id)
        return tail

    def try_place(self, edge_id: int, vertices: Iterable[int], ell: int) -> bool:
        verts = tuple(sorted(vertices))
        if not self.collect(verts, ell + 1).success:
            return False
        self.cover(edge_id, verts)
        return True

    def copy(self) -> PebbleGame:
        other = PebbleGame.__new__(PebbleGame)
        other.n = self.n
        other.k = self.k
        other.pebbles = self.pebbles.copy()
        other._members = self._members.copy()
        other._tail = self._tail.copy()
        other._out = [s.copy() for s in self._out]
        return other

    def remove(self, edge_ids: Iterable[int]) -> None:
        """Delete placed edges, returning each covering pebble to its tail."""
        for e in edge_ids:
            if e not in self._tail:
                raise KeyError(f"edge {e} is not placed")
            t = self._tail.pop(e)
            self._out[t].remove(e)
            del self._members[e]
            self.pebbles[t] += 1

    def shadow(self, remove: Iterable[int] = ()) -> PebbleGame:
        """Independent copy with the edges in ``remove`` taken out."""
        remove = list(remove)
        missing = [e for e in remove if e not in self._tail]
        if missing:
            raise KeyError(f"unknown edge id(s) {missing}")
        other = self.copy()
        other.remove(remove)
        return other


def new_game(n: int, k: int) -> PebbleGame:
    return PebbleGame(n, k)
