"""Rooted graphs, exact rationals and the canonical graph JSON format."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import BadLabel, LoopEdge, OutOfRangeVertex, RootsNotProper, ValidationError

Rational = Fraction

_LABEL_RE = re.compile(r"^(core|centre|plain|cluster:\d+)$")


def fmt_rational(q: Fraction | int) -> str:
    """Render ``q`` as ``a/b`` in lowest terms, always with a denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational: {text!r}") from exc


@dataclass(frozen=True)
class RootedGraph:
    """Simple undirected graph on ``0..n-1`` with a proper root subset.

    Instances are normalised on construction (see :func:`make_graph`) and
    immutable, so they can be hashed and shared freely.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    roots: frozenset[int] = frozenset()
    labels: tuple[tuple[int, str], ...] = field(default=(), compare=True)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def nonroots(self) -> list[int]:
        return [v for v in range(self.n) if v not in self.roots]

    @property
    def sorted_roots(self) -> list[int]:
        return sorted(self.roots)

    @cached_property
    def label_map(self) -> dict[int, str]:
        return dict(self.labels)

    def label(self, v: int) -> str:
        return self.label_map.get(v, "plain")

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def roots_independent(self) -> bool:
        return not any(u in self.roots and v in self.roots for u, v in self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def two_colouring(self) -> list[int] | None:
        """BFS 2-colouring with vertex 0 (and each component's least vertex) coloured 0."""
        colour = [-1] * self.n
        for s in range(self.n):
            if colour[s] != -1:
                continue
            colour[s] = 0
            queue = [s]
            for u in queue:
                for w in sorted(self.adjacency[u]):
                    if colour[w] == -1:
                        colour[w] = 1 - colour[u]
                        queue.append(w)
                    elif colour[w] == colour[u]:
                        return None
        return colour

    def is_bipartite(self) -> bool:
        return self.two_colouring() is not None

    def with_roots(self, roots: Iterable[int]) -> "RootedGraph":
        return make_graph(self.n, self.edges, roots, self.label_map)

    def to_json(self) -> dict:
        out: dict = {
            "n": self.n,
            "edges": [[u, v] for u, v in self.edges],
            "roots": self.sorted_roots,
        }
        if self.labels:
            out["labels"] = {str(v): tag for v, tag in self.labels}
        return out

    def dumps(self) -> str:
        return dumps_canonical(self.to_json())

    def __repr__(self) -> str:
        return f"RootedGraph(n={self.n}, m={self.m}, roots={self.sorted_roots})"


def make_graph(
    vertex_count: int,
    edges: Iterable[Iterable[int]],
    roots: Iterable[int] = (),
    labels: Mapping[int, str] | None = None,
) -> RootedGraph:
    """Validate and normalise a rooted graph.

    Edges are deduplicated and stored as sorted ``(u, v)`` pairs with ``u < v``.
    The root set must be a proper subset of the vertices (it may be empty).
    """
    if not isinstance(vertex_count, int) or vertex_count < 0:
        raise ValidationError(f"vertex_count must be a non-negative integer, got {vertex_count!r}")
    norm: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise OutOfRangeVertex(f"vertex {x} out of range 0..{vertex_count - 1}", [u, v])
        if u == v:
            raise LoopEdge(f"loop at vertex {u}", [u, v])
        norm.add((u, v) if u < v else (v, u))
    root_set = frozenset(int(r) for r in roots)
    for r in root_set:
        if not 0 <= r < vertex_count:
            raise OutOfRangeVertex(f"root {r} out of range 0..{vertex_count - 1}", [r])
    if len(root_set) == vertex_count:
        raise RootsNotProper("root set must be a proper subset of the vertex set", sorted(root_set))
    lab: list[tuple[int, str]] = []
    for v, tag in (labels or {}).items():
        v = int(v)
        if not 0 <= v < vertex_count:
            raise BadLabel(f"label on missing vertex {v}", [v])
        if not _LABEL_RE.match(tag):
            raise BadLabel(f"unknown label {tag!r}", [v])
        if tag != "plain":
            lab.append((v, tag))
    return RootedGraph(vertex_count, tuple(sorted(norm)), root_set, tuple(sorted(lab)))


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def graph_from_json(data: dict | str) -> RootedGraph:
    """Parse graph JSON; unordered or duplicated edges are accepted."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data:
        raise ValidationError("graph JSON needs an object with key 'n'")
    try:
        edges = [tuple(e) for e in data.get("edges", [])]
        if any(len(e) != 2 for e in edges):
            raise ValidationError("edges must be pairs")
        labels = {int(k): v for k, v in (data.get("labels") or {}).items()}
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed graph JSON: {exc}") from exc
    return make_graph(data["n"], edges, data.get("roots", []), labels)
