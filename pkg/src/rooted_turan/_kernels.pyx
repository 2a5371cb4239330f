# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over 64-bit vertex masks; mirrors ``_fallback``."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
import time

DEF MAXW = 64

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)


def min_ratio_enum(list nbr, list deg):
    cdef int k = len(nbr)
    if k == 0:
        raise ValueError("no candidate vertices")
    if k > 62:
        raise ValueError("too many candidate vertices for the compiled kernel")
    cdef uint64_t cnbr[MAXW]
    cdef int64_t cdeg[MAXW]
    cdef int j
    for j in range(k):
        cnbr[j] = <uint64_t>nbr[j]
        cdeg[j] = <int64_t>deg[j]
    cdef int64_t best_e = cdeg[0], best_size = 1
    cdef uint64_t best_mask = 1
    cdef int64_t e = 0, size = 0, lhs, rhs
    cdef uint64_t s = 0, bit, i, top = (<uint64_t>1) << k
    cdef int b
    i = 1
    while i < top:
        b = __builtin_ctzll(i)
        bit = (<uint64_t>1) << b
        if s & bit:
            s ^= bit
            e -= cdeg[b] - __builtin_popcountll(cnbr[b] & s)
            size -= 1
        else:
            e += cdeg[b] - __builtin_popcountll(cnbr[b] & s)
            s |= bit
            size += 1
        lhs = e * best_size
        rhs = best_e * size
        if lhs < rhs or (lhs == rhs and (size < best_size or (size == best_size and s < best_mask))):
            best_e = e
            best_size = size
            best_mask = s
        i += 1
    return int(best_e), int(best_size), int(best_mask)


def embed_search(list host_adj, list back, list filters, long long node_limit, double deadline):
    cdef int k = len(back)
    cdef int hn = len(host_adj)
    if k == 0:
        return 1, [], 0
    if k > MAXW or hn > MAXW:
        raise ValueError("graph too large for the compiled kernel")
    cdef uint64_t adj[MAXW]
    cdef uint64_t cback[MAXW]
    cdef uint64_t cfilt[MAXW]
    cdef uint64_t cand[MAXW]
    cdef int img[MAXW]
    cdef int j
    for j in range(hn):
        adj[j] = <uint64_t>host_adj[j]
    for j in range(k):
        cback[j] = <uint64_t>back[j]
        cfilt[j] = <uint64_t>filters[j]
    cdef uint64_t used = 0, c, low, m, b, lb
    cdef long long nodes = 0
    cdef int depth = 0
    cand[0] = cfilt[0]
    while True:
        c = cand[depth]
        if c == 0:
            depth -= 1
            if depth < 0:
                return 0, None, nodes
            used &= ~((<uint64_t>1) << img[depth])
            continue
        low = c & (~c + 1)
        cand[depth] = c ^ low
        nodes += 1
        if nodes > node_limit:
            return -1, None, nodes
        if deadline > 0 and (nodes & 4095) == 0 and time.monotonic() > deadline:
            return -2, None, nodes
        img[depth] = __builtin_ctzll(low)
        used |= low
        depth += 1
        if depth == k:
            return 1, [img[j] for j in range(k)], nodes
        m = cfilt[depth] & ~used
        b = cback[depth]
        while b and m:
            lb = b & (~b + 1)
            b ^= lb
            m &= adj[img[__builtin_ctzll(lb)]]
        cand[depth] = m
