"""Pure-Python kernels. Semantics match ``_kernels.pyx`` exactly, node for node."""

from __future__ import annotations

import time

FOUND = 1
EXHAUSTED = 0
NODE_LIMIT = -1
TIME_LIMIT = -2


def min_ratio_enum(nbr: list[int], deg: list[int]) -> tuple[int, int, int]:
    """Minimise ``e_S / |S|`` over nonempty ``S`` by Gray-code enumeration.

    ``nbr[i]`` is the bitmask of candidate vertices adjacent to candidate ``i``
    and ``deg[i]`` its full degree. Returns ``(e_S, |S|, mask)`` of the minimiser,
    ties broken by smaller ``|S|`` and then smaller mask.
    """
    k = len(nbr)
    if k == 0:
        raise ValueError("no candidate vertices")
    best_e, best_size, best_mask = deg[0], 1, 1
    e = size = s = 0
    for i in range(1, 1 << k):
        b = (i & -i).bit_length() - 1
        bit = 1 << b
        if s & bit:
            s ^= bit
            e -= deg[b] - (nbr[b] & s).bit_count()
            size -= 1
        else:
            e += deg[b] - (nbr[b] & s).bit_count()
            s |= bit
            size += 1
        lhs = e * best_size
        rhs = best_e * size
        if lhs < rhs or (lhs == rhs and (size < best_size or (size == best_size and s < best_mask))):
            best_e, best_size, best_mask = e, size, s
    return best_e, best_size, best_mask


def embed_search(
    host_adj: list[int],
    back: list[int],
    filters: list[int],
    node_limit: int,
    deadline: float,
) -> tuple[int, list[int] | None, int]:
    """Depth-first injective embedding search over bitmasks.

    Depth ``i`` places the ``i``-th pattern vertex of a fixed order. ``back[i]``
    holds the earlier depths adjacent to it, ``filters[i]`` the admissible host
    vertices. Returns ``(status, images, nodes)``; ``deadline <= 0`` disables
    the wall-clock check.
    """
    k = len(back)
    if k == 0:
        return FOUND, [], 0
    img = [0] * k
    cand = [0] * k
    cand[0] = filters[0]
    used = 0
    nodes = 0
    depth = 0
    while True:
        c = cand[depth]
        if c == 0:
            depth -= 1
            if depth < 0:
                return EXHAUSTED, None, nodes
            used &= ~(1 << img[depth])
            continue
        low = c & -c
        cand[depth] = c ^ low
        nodes += 1
        if nodes > node_limit:
            return NODE_LIMIT, None, nodes
        if deadline > 0 and (nodes & 4095) == 0 and time.monotonic() > deadline:
            return TIME_LIMIT, None, nodes
        img[depth] = low.bit_length() - 1
        used |= low
        depth += 1
        if depth == k:
            return FOUND, img, nodes
        m = filters[depth] & ~used
        b = back[depth]
        while b and m:
            lb = b & -b
            b ^= lb
            m &= host_adj[img[lb.bit_length() - 1]]
        cand[depth] = m
