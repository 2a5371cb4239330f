"""Constructors for the graph families used throughout the package.

Numbering: the non-root skeleton comes first in path/star order, then the root
leaves in the order they are attached. Unrooted patterns (cycles, complete
bipartite graphs) have an empty root set.
"""

from __future__ import annotations

from .errors import BadParameters
from .graph import RootedGraph, make_graph
from .operators import blow_up

FAMILIES = {
    "star": 1,
    "path": 1,
    "cycle": 1,
    "complete_bipartite": 2,
    "K": 2,
    "complete": 1,
    "T": 2,
    "D": 2,
    "H": 2,
    "theta": 2,
}


def _check_int(name: str, value, low: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < low:
        raise BadParameters(f"{name} must be an integer >= {low}, got {value!r}")
    return value


def star(k: int) -> RootedGraph:
    """``k``-star rooted on its leaves; centre is vertex 0."""
    _check_int("k", k, 1)
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)], range(1, k + 1))


def path(m: int, rooted: bool = True) -> RootedGraph:
    """Path with ``m`` edges on ``0..m``, rooted at both endpoints when ``rooted``."""
    _check_int("m", m, 1)
    if rooted and m < 2:
        raise BadParameters("a path rooted at both ends needs length >= 2")
    return make_graph(m + 1, [(i, i + 1) for i in range(m)], [0, m] if rooted else [])


def cycle(k: int) -> RootedGraph:
    _check_int("k", k, 3)
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(s: int, t: int) -> RootedGraph:
    """Unrooted ``K_{s,t}``: sides ``0..s-1`` and ``s..s+t-1``."""
    _check_int("s", s, 1)
    _check_int("t", t, 1)
    return make_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def complete(n: int) -> RootedGraph:
    _check_int("n", n, 1)
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def tree_T(a: int, b: int) -> RootedGraph:
    """The balanced tree with ``a`` non-root path vertices and ``b`` edges.

    For ``a-1 <= b <= 2a-2`` the path ``0..a-1`` receives ``b-a+1`` root leaves
    at positions ``1, floor(1 + i*a/(b-a)) (0 < i < b-a), a`` (1-based). For
    ``b = a`` the single leaf sits on the first path vertex. For ``b >= 2a-1``
    one more leaf is attached to every path vertex of ``T(a, b-a)``.
    """
    _check_int("a", a, 2)
    _check_int("b", b, a)
    return _tree_T(a, b)


def _tree_T(a: int, b: int) -> RootedGraph:
    # b = a-1 (the bare path) is only reached as the base of b = 2a-1
    if b >= 2 * a - 1:
        base = _tree_T(a, b - a)
        n = base.n
        edges = list(base.edges) + [(v, n + v) for v in range(a)]
        return make_graph(n + a, edges, set(base.roots) | set(range(n, n + a)))
    gap = b - a
    if gap <= 0:
        positions = [1] * (gap + 1)
    else:
        positions = [1] + [(gap + i * a) // gap for i in range(1, gap)] + [a]
    edges = [(i, i + 1) for i in range(a - 1)]
    roots = []
    for j, p in enumerate(positions):
        r = a + j
        edges.append((p - 1, r))
        roots.append(r)
    return make_graph(a + len(positions), edges, roots)


def tree_D(t: int, s: int) -> RootedGraph:
    """``t``-star with ``s`` root leaves on each of its ``t+1`` vertices.

    Vertex 0 is the centre, ``1..t`` the star leaves; root leaves follow in
    blocks of ``s`` (centre's block first). Labels mark the centre, the core
    roots on the centre and the cluster of each star leaf.
    """
    _check_int("t", t, 1)
    _check_int("s", s, 1)
    edges = [(0, i) for i in range(1, t + 1)]
    labels = {0: "centre"}
    roots = []
    nxt = t + 1
    for v in range(t + 1):
        for _ in range(s):
            edges.append((v, nxt))
            roots.append(nxt)
            labels[nxt] = "core" if v == 0 else f"cluster:{v}"
            nxt += 1
    return make_graph(nxt, edges, roots, labels)


def tree_H(t: int, s: int) -> RootedGraph:
    """``t``-star with every edge subdivided ``s`` times plus a root leaf on the centre.

    Centre is 0; branch ``j`` (0-based) occupies ``1 + j*s .. (j+1)*s`` outward.
    Roots: the centre's leaf, then the branch ends in branch order.
    """
    _check_int("t", t, 1)
    _check_int("s", s, 1)
    edges = []
    for j in range(t):
        prev = 0
        for i in range(s):
            v = 1 + j * s + i
            edges.append((prev, v))
            prev = v
    nxt = 1 + s * t
    edges.append((0, nxt))
    roots = [nxt]
    for j in range(t):
        r = nxt + 1 + j
        edges.append(((j + 1) * s, r))
        roots.append(r)
    return make_graph(nxt + 1 + t, edges, roots)


def theta(m: int, ell: int) -> RootedGraph:
    """``ell`` internally disjoint paths of length ``m`` between two roots."""
    _check_int("ell", ell, 1)
    return blow_up(path(m), ell)


def construct(family: str, *params: int) -> RootedGraph:
    """Build a named family member, e.g. ``construct("D", 4, 3)``."""
    if family not in FAMILIES:
        raise BadParameters(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if len(params) != FAMILIES[family]:
        raise BadParameters(f"family {family!r} takes {FAMILIES[family]} parameter(s), got {len(params)}")
    builders = {
        "star": star,
        "path": path,
        "cycle": cycle,
        "complete_bipartite": complete_bipartite,
        "K": complete_bipartite,
        "complete": complete,
        "T": tree_T,
        "D": tree_D,
        "H": tree_H,
        "theta": theta,
    }
    return builders[family](*params)
