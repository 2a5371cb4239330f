"""Structural operators on rooted graphs: blow-up, subdivision, densification, identification.

Numbering conventions (fixed so outputs are reproducible):

* ``blow_up``: copy 0 keeps the original numbering; the non-root vertices of
  copy ``c >= 1`` follow in original order at ``n + (c-1)*k + i``.
* ``subdivide``: original vertices keep their numbers; the vertex on the
  ``i``-th edge (sorted order) is ``n + i``.
* ``densify``: the ``t`` roots joined to the ``B`` side are ``n..n+t-1``, the
  ``t`` roots joined to the ``A`` side follow.
* ``identify``: the larger of the two vertices is removed and later vertices
  shift down by one.
"""

from __future__ import annotations

from .errors import LoopEdge, MixedRootStatus, NotBipartite, NotConnected, OutOfRangeVertex, SameVertex, ValidationError
from .graph import RootedGraph, make_graph


def blow_up(F: RootedGraph, ell: int) -> RootedGraph:
    """Glue ``ell`` copies of ``F`` along the root set.

    Root-root edges are shared by all copies and therefore appear once.
    """
    if not isinstance(ell, int) or ell < 1:
        raise ValidationError(f"blow-up multiplicity must be a positive integer, got {ell!r}")
    free = F.nonroots
    k = len(free)
    pos = {v: i for i, v in enumerate(free)}

    def image(v: int, c: int) -> int:
        if c == 0 or v in F.roots:
            return v
        return F.n + (c - 1) * k + pos[v]

    edges = set()
    labels = {}
    for c in range(ell):
        for u, v in F.edges:
            edges.add((image(u, c), image(v, c)))
        for v, tag in F.labels:
            labels[image(v, c)] = tag
    return make_graph(F.n + (ell - 1) * k, edges, F.roots, labels)


def subdivide(F: RootedGraph) -> RootedGraph:
    """Replace every edge by a path of length two through a new non-root vertex."""
    edges = []
    for i, (u, v) in enumerate(F.edges):
        w = F.n + i
        edges.append((u, w))
        edges.append((w, v))
    return make_graph(F.n + F.m, edges, F.roots, F.label_map)


def bipartition(F: RootedGraph) -> tuple[list[int], list[int]]:
    """The unique bipartition ``(A, B)`` of a connected bipartite graph, vertex 0 in ``A``."""
    if not F.is_connected():
        raise NotConnected("graph is not connected; its bipartition is not unique")
    colour = F.two_colouring()
    if colour is None:
        raise NotBipartite("graph contains an odd cycle")
    A = [v for v in range(F.n) if colour[v] == 0]
    B = [v for v in range(F.n) if colour[v] == 1]
    return A, B


def densify(F: RootedGraph, t: int, starred: bool = False) -> RootedGraph:
    """Add ``t`` new roots complete to each side of the bipartition.

    The roots of ``R1`` see all of ``B``, those of ``R2`` all of ``A``, and
    ``R1``-``R2`` is complete. With ``starred`` every edge inside the enlarged
    root set is deleted instead.
    """
    if not isinstance(t, int) or t < 1:
        raise ValidationError(f"t must be a positive integer, got {t!r}")
    A, B = bipartition(F)
    n = F.n
    R1 = list(range(n, n + t))
    R2 = list(range(n + t, n + 2 * t))
    edges = list(F.edges)
    edges += [(r, b) for r in R1 for b in B]
    edges += [(r, a) for r in R2 for a in A]
    edges += [(r1, r2) for r1 in R1 for r2 in R2]
    roots = set(F.roots) | set(R1) | set(R2)
    if starred:
        edges = [(u, v) for u, v in edges if not (u in roots and v in roots)]
    return make_graph(n + 2 * t, edges, roots, F.label_map)


def identify(F: RootedGraph, u: int, v: int) -> RootedGraph:
    """Merge ``u`` and ``v`` into one vertex carrying the union of their neighbourhoods."""
    for x in (u, v):
        if not 0 <= x < F.n:
            raise OutOfRangeVertex(f"vertex {x} out of range", [x])
    if u == v:
        raise SameVertex("cannot identify a vertex with itself", [u])
    if (u in F.roots) != (v in F.roots):
        raise MixedRootStatus("identified vertices must both be roots or both non-roots", [u, v])
    keep, drop = min(u, v), max(u, v)

    def new(x: int) -> int:
        if x == drop:
            return keep
        return x - 1 if x > drop else x

    edges = set()
    for a, b in F.edges:
        a2, b2 = new(a), new(b)
        if a2 == b2:
            raise LoopEdge("identifying adjacent vertices would create a loop", [u, v])
        edges.add((a2, b2))
    labels = {new(x): tag for x, tag in F.labels if x != drop}
    return make_graph(F.n - 1, edges, {new(r) for r in F.roots}, labels)
