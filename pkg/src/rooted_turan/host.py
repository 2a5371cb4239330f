"""Host graphs and the neighbourhood notation used by the embedding lemmas."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .errors import OutOfRangeVertex
from .graph import RootedGraph, make_graph


class HostGraph:
    """Plain undirected graph with set-valued neighbourhood queries.

    ``gamma(A)`` is the external neighbourhood, ``layer(A, i)`` the vertices at
    distance exactly ``i`` from ``A``, ``common(S)`` the common neighbourhood and
    ``e(A, B)`` the number of edges with one end in ``A`` and the other in ``B``.
    """

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        g = make_graph(n, edges)
        self.n = g.n
        self.edges = g.edges
        self.adj: tuple[frozenset[int], ...] = g.adjacency

    @classmethod
    def from_graph(cls, G: "RootedGraph | HostGraph") -> "HostGraph":
        if isinstance(G, HostGraph):
            return G
        return cls(G.n, G.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for nb in self.adj:
            m = 0
            for w in nb:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def as_graph(self) -> RootedGraph:
        return make_graph(self.n, self.edges)

    def _check(self, vs: Iterable[int]) -> set[int]:
        vs = set(vs)
        for v in vs:
            if not 0 <= v < self.n:
                raise OutOfRangeVertex(f"vertex {v} not in host", [v])
        return vs

    def degree(self, v: int, within: Iterable[int] | None = None) -> int:
        if within is None:
            return len(self.adj[v])
        return len(self.adj[v] & set(within))

    def gamma(self, A: Iterable[int], within: Iterable[int] | None = None) -> set[int]:
        A = self._check(A)
        out = set().union(*(self.adj[a] for a in A)) - A if A else set()
        return out if within is None else out & set(within)

    def layer(self, A: Iterable[int], i: int) -> set[int]:
        A = self._check(A)
        if i == 0:
            return set(A)
        seen = set(A)
        frontier = set(A)
        for _ in range(i):
            frontier = set().union(*(self.adj[v] for v in frontier)) - seen if frontier else set()
            seen |= frontier
        return frontier

    def layers(self, A: Iterable[int]) -> list[set[int]]:
        """All nonempty distance layers from ``A``, starting with ``A`` itself."""
        A = self._check(A)
        out = [set(A)] if A else []
        seen = set(A)
        frontier = set(A)
        while frontier:
            frontier = set().union(*(self.adj[v] for v in frontier)) - seen
            seen |= frontier
            if frontier:
                out.append(frontier)
        return out

    def common(self, S: Iterable[int], within: Iterable[int] | None = None) -> set[int]:
        S = self._check(S)
        if not S:
            out = set(range(self.n))
        else:
            it = iter(S)
            out = set(self.adj[next(it)])
            for v in it:
                out &= self.adj[v]
        return out if within is None else out & set(within)

    def common_degree(self, S: Iterable[int], within: Iterable[int] | None = None) -> int:
        return len(self.common(S, within))

    def edge_set(self, A: Iterable[int], B: Iterable[int]) -> set[tuple[int, int]]:
        A, B = self._check(A), self._check(B)
        out = set()
        for a in A:
            for b in self.adj[a] & B:
                out.add((a, b) if a < b else (b, a))
        return out

    def e(self, A: Iterable[int], B: Iterable[int] | None = None) -> int:
        return len(self.edge_set(A, A if B is None else B))

    def __repr__(self) -> str:
        return f"HostGraph(n={self.n}, m={self.m})"
