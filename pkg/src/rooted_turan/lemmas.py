"""Constructive embedding lemmas, made deterministic.

Each routine checks its numeric hypothesis exhaustively, builds the embedding
the way the existence argument does, and re-verifies the result before
returning it. Failure of a step that the argument guarantees raises
:class:`InternalStuck`.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import ceil, factorial
from typing import Iterable

from .constructions import tree_D, tree_T
from .errors import ExpansionFails, HypothesisViolated, InternalStuck, ValidationError
from .graph import RootedGraph
from .host import HostGraph
from .operators import blow_up
from .search import Embedding, verify_embedding


def _finish(pattern: RootedGraph, host: HostGraph, mapping: list[int], name: str) -> Embedding:
    if not verify_embedding(pattern, host, mapping):
        raise InternalStuck(f"{name}: assembled map is not an embedding", mapping)
    return Embedding(tuple(mapping), name, "host")


# -- star matchings -----------------------------------------------------------


def star_matching(host: HostGraph, A: Iterable[int], B: Iterable[int], k: int) -> list[tuple[int, list[int]]]:
    """Vertex-disjoint ``k``-stars centred on every vertex of ``A`` with leaves in ``B``.

    Reduces to a maximum matching between ``k`` clones of each ``a`` and ``B``
    (augmenting paths). If no cover exists, raises :class:`ExpansionFails`
    carrying a set ``S`` with ``|N(S) & B| < k|S|``.
    """
    host = HostGraph.from_graph(host)
    A, B = sorted(set(A)), sorted(set(B))
    if k < 1:
        raise ValidationError("k must be positive")
    if set(A) & set(B):
        raise ValidationError("A and B must be disjoint")
    Bset = set(B)
    nbrs = {a: sorted(host.adj[a] & Bset) for a in A}
    clones = [(a, i) for a in A for i in range(k)]
    match_right: dict[int, int] = {}  # b -> clone index
    match_left: list[int | None] = [None] * len(clones)

    def augment(c: int, seen: set[int]) -> bool:
        for b in nbrs[clones[c][0]]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_right or augment(match_right[b], seen):
                match_right[b] = c
                match_left[c] = b
                return True
        return False

    for c in range(len(clones)):
        augment(c, set())

    free = [c for c in range(len(clones)) if match_left[c] is None]
    if free:
        # alternating reachability from unmatched clones yields a Hall violator
        reach_left = set(free)
        stack = list(free)
        while stack:
            c = stack.pop()
            for b in nbrs[clones[c][0]]:
                c2 = match_right.get(b)
                if c2 is not None and c2 not in reach_left:
                    reach_left.add(c2)
                    stack.append(c2)
        S = sorted({clones[c][0] for c in reach_left})
        raise ExpansionFails(
            f"|N(S)| < {k}|S| for S of size {len(S)}",
            {"S": S, "neighbourhood": sorted(host.gamma(S, Bset))},
        )
    stars = []
    for a in A:
        leaves = sorted(match_left[A.index(a) * k + i] for i in range(k))
        stars.append((a, leaves))
    return stars


def hall_violator(host: HostGraph, A: Iterable[int], B: Iterable[int], k: int) -> list[int] | None:
    """Brute force over all subsets of ``A``; the first violating set or ``None``."""
    host = HostGraph.from_graph(host)
    A, Bset = sorted(set(A)), set(B)
    for r in range(1, len(A) + 1):
        for S in combinations(A, r):
            if len(host.gamma(S, Bset)) < k * r:
                return list(S)
    return None


# -- dependent random choice --------------------------------------------------


def _greedy_clean(X: list[int], bad: list[tuple[int, ...]]) -> list[int]:
    """Delete vertices until no bad set survives: most bad sets first, then lowest index."""
    alive = set(X)
    live = [S for S in bad if alive.issuperset(S)]
    while live:
        counts = Counter(v for S in live for v in S)
        top = max(counts.values())
        victim = min(v for v, c in counts.items() if c == top)
        alive.discard(victim)
        live = [S for S in live if victim not in S]
    return sorted(alive)


def dependent_random_choice(
    host: HostGraph, A: Iterable[int], B: Iterable[int], d: int, s: int, t: int
) -> tuple[int, list[int]]:
    """Find ``u`` in ``B`` and ``A'`` inside ``N(u) & A`` whose ``s``-subsets all have ``t`` common neighbours in ``B``.

    Requires every vertex of ``A`` to have at least ``d`` neighbours in ``B``
    with ``d * s! >= 2 t |A|^(s-1)``; then some ``u`` leaves at least
    ``ceil(d|A| / (2|B|))`` vertices after deleting one vertex per bad set.
    All ``u`` are scanned in increasing order and the first one reaching that
    bound is returned.
    """
    host = HostGraph.from_graph(host)
    A, B = sorted(set(A)), sorted(set(B))
    if s < 1 or t < 1 or d < 1:
        raise ValidationError("d, s, t must be positive")
    if not A or not B or set(A) & set(B):
        raise ValidationError("A and B must be nonempty and disjoint")
    Bset = set(B)
    low = [a for a in A if host.degree(a, Bset) < d]
    if low:
        raise HypothesisViolated(f"{len(low)} vertices of A have degree < {d} into B", {"low_degree": low})
    if d * factorial(s) < 2 * t * len(A) ** (s - 1):
        raise HypothesisViolated(
            f"d = {d} below 2t|A|^(s-1)/s!",
            {"d": d, "threshold": f"{2 * t * len(A) ** (s - 1)}/{factorial(s)}"},
        )
    target = ceil(d * len(A) / (2 * len(B)))
    for u in B:
        X = sorted(host.adj[u] & set(A))
        if len(X) < target:
            continue
        bad = [S for S in combinations(X, s) if host.common_degree(S, Bset) < t]
        kept = _greedy_clean(X, bad)
        if len(kept) >= target:
            return u, kept
    raise InternalStuck("no vertex of B reached the averaging bound", {"target": target})


def drc_postcondition(host: HostGraph, A, B, d: int, s: int, t: int, u: int, A_prime) -> bool:
    """Exhaustive re-check of the dependent-random-choice conclusion."""
    host = HostGraph.from_graph(host)
    A, Bset, A_prime = set(A), set(B), list(A_prime)
    if u not in Bset or not set(A_prime) <= (host.adj[u] & A):
        return False
    if len(A_prime) < ceil(d * len(A) / (2 * len(Bset))):
        return False
    return all(host.common_degree(S, Bset) >= t for S in combinations(A_prime, s))


# -- embedding blow-ups of D(t, s) --------------------------------------------


def D_blowup_roles(t: int, s: int, ell: int) -> tuple[RootedGraph, dict[str, list[int]]]:
    """The pattern ``D(t,s)^ell`` and its vertices grouped by role."""
    P = blow_up(tree_D(t, s), ell)
    roles: dict[str, list[int]] = {"core": [], "centre": [], "cluster_root": [], "leaf": []}
    for v in range(P.n):
        tag = P.label(v)
        if tag == "core":
            roles["core"].append(v)
        elif tag == "centre":
            roles["centre"].append(v)
        elif tag.startswith("cluster:"):
            roles["cluster_root"].append(v)
        else:
            roles["leaf"].append(v)
    return P, roles


def check_D_hypothesis(host: HostGraph, W: Iterable[int], ell: int, t: int) -> dict | None:
    """``None`` if the hypothesis holds, else a payload describing the failure."""
    host = HostGraph.from_graph(host)
    W = set(W)
    s = len(W)
    A = host.common(W)
    if len(A) < s * t + ell:
        return {"reason": "A too small", "A": sorted(A), "needed": s * t + ell}
    outside = A | W
    for S in combinations(sorted(A), s + 1):
        if len(host.common(S) - outside) < ell * t:
            return {"reason": "sparse (s+1)-set", "S": list(S), "needed": ell * t}
    return None


def embed_D_blowup(host: HostGraph, W: Iterable[int], ell: int, t: int) -> Embedding:
    """Embed ``D(t, s)^ell`` with ``s = |W|`` using ``A = N(W)``.

    Cores go to ``W``, centres and cluster roots to ``A``; every remaining
    vertex then takes the least unused common neighbour of its ``s + 1``
    already-placed neighbours outside ``A | W``.
    """
    host = HostGraph.from_graph(host)
    W = sorted(set(W))
    s = len(W)
    if s < 1 or t < 1 or ell < 1:
        raise ValidationError("|W|, t and ell must be positive")
    failure = check_D_hypothesis(host, W, ell, t)
    if failure is not None:
        raise HypothesisViolated(f"hypothesis fails: {failure['reason']}", failure)
    A = sorted(host.common(W))
    P, roles = D_blowup_roles(t, s, ell)
    mapping = [-1] * P.n
    for v, w in zip(roles["core"], W):
        mapping[v] = w
    for v, a in zip(roles["centre"] + roles["cluster_root"], A):
        mapping[v] = a
    blocked = set(A) | set(W)
    used: set[int] = set()
    for v in roles["leaf"]:
        S_v = [mapping[w] for w in P.adjacency[v]]
        options = sorted(host.common(S_v) - blocked - used)
        if not options:
            raise InternalStuck("no free common neighbour for a leaf-side vertex", {"vertex": v, "S": S_v})
        mapping[v] = options[0]
        used.add(options[0])
    return _finish(P, host, mapping, f"D({t},{s})^{ell}")


# -- embedding blow-ups of T(4, 7) --------------------------------------------


def T47_roles(ell: int) -> tuple[RootedGraph, list[int], list[list[int]]]:
    """``T(4,7)^ell`` with roots ``r1..r4`` in path order and ``Z_i = N(r_i)`` by copy."""
    base = tree_T(4, 7)
    P = blow_up(base, ell)
    roots = []
    for i in range(4):
        (r,) = [w for w in base.adjacency[i] if w in base.roots]
        roots.append(r)
    Z = [[v for v in sorted(P.adjacency[r])] for r in roots]
    return P, roots, Z


def check_T47_hypothesis(host: HostGraph, u1: int, A, B, ell: int) -> dict | None:
    host = HostGraph.from_graph(host)
    A, B = set(A), set(B)
    if not A <= host.adj[u1]:
        return {"reason": "A not inside N(u1)", "bad": sorted(A - host.adj[u1])}
    ext = host.gamma(A) - {u1}
    if not B <= ext:
        return {"reason": "B not inside the external neighbourhood of A", "bad": sorted(B - ext)}
    e = host.e(A, B)
    if e < 4 * ell * len(A) ** 2:
        return {"reason": "e(A,B) < 4 ell |A|^2", "e": e, "needed": 4 * ell * len(A) ** 2}
    if 10 * ell * len(B) > e:
        return {"reason": "|B| > e(A,B)/(10 ell)", "B": len(B), "e": e}
    return None


def expand_T47(host: HostGraph, u1: int, A: Iterable[int], B: Iterable[int], ell: int) -> Embedding:
    """Embed ``T(4,7)^ell`` from a dense pair ``(A, B)`` hanging off ``u1``.

    ``B'`` keeps the vertices of ``B`` with at least ``2 ell + 2`` neighbours in
    ``A``. Scanning ``u3`` in ``B'`` in order, ``X = N(u3) & A`` is cleaned of
    pairs with at most ``2 ell`` common neighbours in ``B'``; the first ``u3``
    leaving ``ell + 2`` vertices supplies ``u2``, ``u4`` and the images of
    ``Z_3``. The remaining layers are filled greedily.
    """
    host = HostGraph.from_graph(host)
    A, B = sorted(set(A)), sorted(set(B))
    if ell < 1:
        raise ValidationError("ell must be positive")
    failure = check_T47_hypothesis(host, u1, A, B, ell)
    if failure is not None:
        raise HypothesisViolated(f"hypothesis fails: {failure['reason']}", failure)
    Aset = set(A)
    Bp = [b for b in B if host.degree(b, Aset) >= 2 * ell + 2]
    Bpset = set(Bp)
    chosen = None
    for u in Bp:
        X = sorted(host.adj[u] & Aset)
        if len(X) < ell + 2:
            continue
        bad = [P for P in combinations(X, 2) if host.common_degree(P, Bpset) <= 2 * ell]
        kept = _greedy_clean(X, bad)
        if len(kept) >= ell + 2:
            chosen = (u, kept)
            break
    if chosen is None:
        raise InternalStuck("no u3 with a large enough clean neighbourhood")
    u3, Xp = chosen
    u2, u4 = Xp[0], Xp[1]
    U3 = Xp[2 : 2 + ell]
    P, roots, Z = T47_roles(ell)
    mapping = [-1] * P.n
    for r, u in zip(roots, (u1, u2, u3, u4)):
        mapping[r] = u
    for z, x in zip(Z[2], U3):
        mapping[z] = x
    used = {u1, u2, u3, u4, *U3}
    z3 = set(Z[2])
    for i, anchor in ((1, u2), (3, u4)):
        for x in Z[i]:
            (z,) = [w for w in P.adjacency[x] if w in z3]
            options = sorted(host.common([anchor, mapping[z]], Bpset) - used)
            if not options:
                raise InternalStuck("no common neighbour left for a Z2/Z4 vertex", {"vertex": x})
            mapping[x] = options[0]
            used.add(options[0])
    z2 = set(Z[1])
    for x in Z[0]:
        (z,) = [w for w in P.adjacency[x] if w in z2]
        options = sorted((host.adj[mapping[z]] & Aset) - used)
        if not options:
            raise InternalStuck("no neighbour in A left for a Z1 vertex", {"vertex": x})
        mapping[x] = options[0]
        used.add(options[0])
    return _finish(P, host, mapping, f"T(4,7)^{ell}")
