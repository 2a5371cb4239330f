"""Backtracking embedding search shared by containment, isomorphism and the oracle."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Sequence

from . import _core
from .errors import BudgetExceeded, InternalStuck, ValidationError
from .graph import RootedGraph
from .host import HostGraph


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 10**7
    time_limit: float = 60.0
    seed: int = 0

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValidationError("search budget limits must be positive")

    def deadline(self) -> float:
        return time.monotonic() + self.time_limit


@dataclass(frozen=True)
class Embedding:
    """Injective, edge-preserving map from pattern vertices to host vertices."""

    mapping: tuple[int, ...]
    pattern_id: str = "pattern"
    host_id: str = "host"

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def __len__(self) -> int:
        return len(self.mapping)

    def to_json(self) -> dict:
        return {str(p): h for p, h in enumerate(self.mapping)}


def verify_embedding(pattern: RootedGraph, host: HostGraph | RootedGraph, mapping: Sequence[int]) -> bool:
    """Independent check: total, injective, in range and edge-preserving."""
    host = HostGraph.from_graph(host)
    if len(mapping) != pattern.n or len(set(mapping)) != len(mapping):
        return False
    if any(not 0 <= h < host.n for h in mapping):
        return False
    return all(mapping[v] in host.adj[mapping[u]] for u, v in pattern.edges)


def search_order(pattern: RootedGraph, first: Sequence[int] = ()) -> list[int]:
    """Connectivity-greedy order: most already-placed neighbours, then degree, then index."""
    order = list(first)
    placed = set(order)
    adj = pattern.adjacency
    while len(order) < pattern.n:
        best = max(
            (v for v in range(pattern.n) if v not in placed),
            key=lambda v: (len(adj[v] & placed), len(adj[v]), -v),
        )
        order.append(best)
        placed.add(best)
    return order


def run_search(
    host_masks: Sequence[int],
    pattern: RootedGraph,
    order: Sequence[int],
    filters: Sequence[int],
    node_limit: int,
    deadline: float = 0.0,
) -> tuple[int, list[int] | None, int]:
    """Run the kernel with pattern vertices placed in ``order``.

    ``filters[v]`` is the admissible host mask of pattern vertex ``v``. Returns
    ``(status, mapping indexed by pattern vertex, nodes)``.
    """
    depth_of = {v: i for i, v in enumerate(order)}
    back = []
    for v in order:
        b = 0
        for w in pattern.adjacency[v]:
            if depth_of[w] < depth_of[v]:
                b |= 1 << depth_of[w]
        back.append(b)
    status, imgs, nodes = _core.embed_search(
        list(host_masks), back, [filters[v] for v in order], min(node_limit, 2**62), deadline
    )
    if status != 1:
        return status, None, nodes
    mapping = [0] * pattern.n
    for v, h in zip(order, imgs):
        mapping[v] = h
    return status, mapping, nodes


def degree_filters(host: HostGraph, pattern: RootedGraph, exact: bool = False) -> list[int]:
    by_degree: dict[int, int] = {}
    hdeg = [len(a) for a in host.adj]
    out = []
    for v in range(pattern.n):
        d = pattern.degree(v)
        if d not in by_degree:
            m = 0
            for h, hd in enumerate(hdeg):
                if (hd == d) if exact else (hd >= d):
                    m |= 1 << h
            by_degree[d] = m
        out.append(by_degree[d])
    return out


def _permuted(host: HostGraph, seed: int) -> tuple[HostGraph, list[int]]:
    perm = list(range(host.n))
    random.Random(seed).shuffle(perm)
    relabelled = HostGraph(host.n, [(perm[u], perm[v]) for u, v in host.edges])
    inverse = [0] * host.n
    for old, new in enumerate(perm):
        inverse[new] = old
    return relabelled, inverse


def find_subgraph(
    host: HostGraph | RootedGraph,
    pattern: RootedGraph,
    budget: SearchBudget | None = None,
) -> Embedding | None:
    """Find a (not necessarily induced) copy of ``pattern`` in ``host``.

    Returns ``None`` only when the search space was exhausted; a truncated
    search raises :class:`BudgetExceeded`. A nonzero seed permutes the host
    vertex order before searching.
    """
    budget = budget or SearchBudget()
    host = HostGraph.from_graph(host)
    if pattern.n > host.n or pattern.m > host.m:
        return None
    inverse = None
    work = host
    if budget.seed:
        work, inverse = _permuted(host, budget.seed)
    status, mapping, nodes = run_search(
        work.masks, pattern, search_order(pattern), degree_filters(work, pattern), budget.node_limit, budget.deadline()
    )
    if status < 0:
        raise BudgetExceeded(
            "embedding search truncated",
            {"nodes": nodes, "reason": "node_limit" if status == -1 else "time_limit"},
        )
    if status == 0:
        return None
    if inverse is not None:
        mapping = [inverse[h] for h in mapping]
    if not verify_embedding(pattern, host, mapping):
        raise InternalStuck("search returned an invalid embedding", mapping)
    return Embedding(tuple(mapping))


def contains_through(
    host: HostGraph,
    pattern: RootedGraph,
    anchor: Sequence[int],
    node_limit: int,
    deadline: float = 0.0,
) -> tuple[bool, int]:
    """Is there a copy of ``pattern`` using host vertex ``anchor[0]`` (and edge ``anchor`` if two)?

    Returns ``(found, nodes_used)``; raises :class:`BudgetExceeded` on truncation.
    """
    if pattern.m == 0 or pattern.n > host.n:
        return (pattern.n <= host.n and pattern.m == 0), 0
    filters = degree_filters(host, pattern)
    total = 0
    if len(anchor) == 1:
        starts = [(p,) for p in range(pattern.n)]
    else:
        starts = [(p, q) for u, v in pattern.edges for p, q in ((u, v), (v, u))]
    for start in starts:
        f = list(filters)
        ok = True
        for p, x in zip(start, anchor):
            f[p] &= 1 << x
            ok = ok and f[p] != 0
        if not ok:
            continue
        status, _, nodes = run_search(host.masks, pattern, search_order(pattern, start), f, node_limit - total, deadline)
        total += nodes
        if status < 0:
            raise BudgetExceeded("anchored search truncated", {"nodes": total})
        if status == 1:
            return True, total
    return False, total


def is_isomorphic(
    F: RootedGraph,
    G: RootedGraph,
    respect_roots: bool = True,
    node_limit: int = 10**7,
) -> bool:
    """Edge-preserving bijection test, optionally mapping roots onto roots."""
    if F.n != G.n or F.m != G.m:
        return False
    if sorted(F.degrees) != sorted(G.degrees):
        return False
    if respect_roots:
        if len(F.roots) != len(G.roots):
            return False
        if sorted(F.degree(r) for r in F.roots) != sorted(G.degree(r) for r in G.roots):
            return False
    host = HostGraph(G.n, G.edges)
    filters = degree_filters(host, F, exact=True)
    if respect_roots:
        root_mask = sum(1 << r for r in G.roots)
        filters = [f & root_mask if v in F.roots else f & ~root_mask for v, f in enumerate(filters)]
    status, _, nodes = run_search(host.masks, F, search_order(F), filters, node_limit)
    if status < 0:
        raise BudgetExceeded("isomorphism search truncated", {"nodes": nodes})
    return status == 1
