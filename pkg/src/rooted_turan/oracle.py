"""Exact extremal numbers ``ex(n, F)`` for small ``n``.

``extremal_number`` certifies its answer by generating, up to isomorphism,
every ``F``-free graph that could beat a greedy incumbent. Graphs are grown
one vertex at a time, the new vertex always being of minimum degree, so a graph
with ``m`` edges on ``k`` vertices comes from one with at least
``m - floor(2m/k)`` edges on ``k - 1`` vertices. Only copies of ``F`` through
the new vertex need to be searched for.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .errors import BadParameters, BudgetExceeded, DegenerateFit
from .graph import RootedGraph, dumps_canonical, make_graph
from .host import HostGraph
from .search import SearchBudget, contains_through, find_subgraph, is_isomorphic

FIT_LABEL = "diagnostic: asymptotics not certifiable at desk scale"


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    max_edges: int
    witness: RootedGraph
    certified: bool

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "max_edges": self.max_edges,
            "certified": self.certified,
            "witness": self.witness.to_json(),
        }
        if not self.certified:
            out["qualifier"] = "lower bound only"
        return out

    def dumps(self) -> str:
        return dumps_canonical(self.to_json())

    def summary(self) -> str:
        if self.certified:
            return f"ex({self.n}) = {self.max_edges}"
        return f"ex({self.n}) >= {self.max_edges} (lower bound only)"


def is_F_free(G: HostGraph | RootedGraph, F: RootedGraph, budget: SearchBudget | None = None) -> bool:
    return find_subgraph(G, F, budget) is None


def brute_force_contains(host: HostGraph | RootedGraph, pattern: RootedGraph) -> bool:
    """Reference check over every injection; only for tiny inputs."""
    host = HostGraph.from_graph(host)
    if pattern.n > host.n:
        return False
    for image in permutations(range(host.n), pattern.n):
        if all(image[v] in host.adj[image[u]] for u, v in pattern.edges):
            return True
    return False


class _Budget:
    def __init__(self, budget: SearchBudget):
        self.left = budget.node_limit
        self.deadline = budget.deadline()

    def spend(self, nodes: int) -> None:
        self.left -= nodes
        if self.left < 0:
            raise BudgetExceeded("node limit reached", {"reason": "node_limit"})
        if time.monotonic() > self.deadline:
            raise BudgetExceeded("time limit reached", {"reason": "time_limit"})


def _has_copy_through(G: HostGraph, F: RootedGraph, anchor: tuple[int, ...], meter: _Budget) -> bool:
    found, nodes = contains_through(G, F, anchor, max(meter.left, 1), meter.deadline)
    meter.spend(nodes)
    return found


def _greedy_graph(n: int, F: RootedGraph, seed: int, meter: _Budget | None = None) -> RootedGraph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    random.Random(seed).shuffle(pairs)
    meter = meter or _Budget(SearchBudget(node_limit=2**62, time_limit=1e9))
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        trial = HostGraph(n, edges + [(u, v)])
        if not _has_copy_through(trial, F, (u, v), meter):
            edges.append((u, v))
    return make_graph(n, edges)


def greedy_lower_bound(n: int, F: RootedGraph, seed: int = 0) -> int:
    """Edge count of a random maximal ``F``-free graph on ``n`` vertices."""
    _check_pattern(F)
    if n < 1:
        raise BadParameters("n must be positive")
    return _greedy_graph(n, F, seed).m


def _check_pattern(F: RootedGraph) -> None:
    if F.m == 0:
        raise BadParameters("forbidden graph must have at least one edge")


def _refine_key(n: int, adj: list[int]) -> tuple:
    """Isomorphism invariant: colour refinement from degrees, three rounds."""
    colours = [bin(a).count("1") for a in adj]
    history = [tuple(sorted(colours))]
    for _ in range(3):
        sigs = []
        for v in range(n):
            nb = sorted(colours[w] for w in range(n) if adj[v] >> w & 1)
            sigs.append((colours[v], tuple(nb)))
        table = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colours = [table[s] for s in sigs]
        history.append(tuple(sorted(sigs)))
    return tuple(history)


def _thresholds(n: int, target: int) -> list[int]:
    """``th[k]``: minimum edges a ``k``-vertex ancestor of a ``target``-edge graph must have."""
    th = [0] * (n + 1)
    th[n] = target
    for k in range(n, 1, -1):
        th[k - 1] = max(0, th[k] - (2 * th[k]) // k)
    return th


def extremal_number(n: int, F: RootedGraph, budget: SearchBudget | None = None) -> ExtremalResult:
    """Maximum edge count of an ``F``-free graph on ``n`` vertices.

    On budget exhaustion the greedy incumbent is returned with
    ``certified=False``; its edge count is then a lower bound only.
    """
    budget = budget or SearchBudget()
    _check_pattern(F)
    if n < 1:
        raise BadParameters("n must be positive")
    if F.n > n:
        K = make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
        return ExtremalResult(n, K.m, K, True)
    meter = _Budget(budget)
    try:
        incumbent = _greedy_graph(n, F, budget.seed, meter)
    except BudgetExceeded:
        empty = make_graph(n, [])
        return ExtremalResult(n, 0, empty, False)
    th = _thresholds(n, incumbent.m + 1)
    try:
        best = _generate(n, F, th, meter)
    except BudgetExceeded:
        return ExtremalResult(n, incumbent.m, incumbent, False)
    if best is None:
        return ExtremalResult(n, incumbent.m, incumbent, True)
    return ExtremalResult(n, best.m, best, True)


def _generate(n: int, F: RootedGraph, th: list[int], meter: _Budget) -> RootedGraph | None:
    # level entries: (adjacency masks, edge count)
    level: list[tuple[list[int], int]] = [([0], 0)]
    for k in range(2, n + 1):
        new_v = k - 1
        buckets: dict[tuple, list[list[int]]] = {}
        out: list[tuple[list[int], int]] = []
        for adj, e in level:
            degs = [bin(a).count("1") for a in adj]
            lo = max(0, th[k] - e)
            hi = min(k - 1, (min(degs) if degs else 0) + 1)
            for d in range(lo, hi + 1):
                for nbrs in combinations(range(k - 1), d):
                    inset = set(nbrs)
                    if any(degs[v] + (v in inset) < d for v in range(k - 1)):
                        continue
                    adj2 = list(adj) + [0]
                    for v in nbrs:
                        adj2[v] |= 1 << new_v
                        adj2[new_v] |= 1 << v
                    meter.spend(1)
                    G = _host_from_masks(k, adj2)
                    if F.n <= k and F.m <= e + d and _has_copy_through(G, F, (new_v,), meter):
                        continue
                    key = _refine_key(k, adj2)
                    twins = buckets.setdefault(key, [])
                    if any(_iso_masks(k, adj2, other) for other in twins):
                        continue
                    twins.append(adj2)
                    out.append((adj2, e + d))
        level = out
        if not level:
            return None
    best = max(level, key=lambda item: item[1])
    adj, _ = best
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])


def _host_from_masks(k: int, adj: list[int]) -> HostGraph:
    return HostGraph(k, [(u, v) for u in range(k) for v in range(u + 1, k) if adj[u] >> v & 1])


def _iso_masks(k: int, a: list[int], b: list[int]) -> bool:
    A = make_graph(k, [(u, v) for u in range(k) for v in range(u + 1, k) if a[u] >> v & 1])
    B = make_graph(k, [(u, v) for u in range(k) for v in range(u + 1, k) if b[u] >> v & 1])
    return is_isomorphic(A, B, respect_roots=False)


def exponent_fit(F: RootedGraph, n_values, budget: SearchBudget | None = None) -> dict:
    """Least-squares slope of ``log ex(n, F)`` against ``log n``.

    Purely diagnostic: small ``n`` say nothing certain about asymptotics.
    """
    n_values = sorted(set(int(x) for x in n_values))
    if len(n_values) < 2:
        raise BadParameters("need at least two values of n")
    points = []
    for n in n_values:
        res = extremal_number(n, F, budget)
        points.append({"n": n, "ex": res.max_edges, "certified": res.certified})
    if any(p["ex"] <= 0 for p in points):
        raise DegenerateFit("ex(n, F) = 0 for some n; log-log fit undefined", points)
    x = np.log([p["n"] for p in points])
    y = np.log([p["ex"] for p in points])
    slope = float(np.polyfit(x, y, 1)[0])
    return {"slope": slope, "points": points, "label": FIT_LABEL}
