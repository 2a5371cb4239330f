"""Compiled and pure-Python kernels must agree bit for bit."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rooted_turan import _core, _fallback

compiled = pytest.mark.skipif("compiled" not in _core.available_backends(), reason="extension not built")


def random_ratio_input(rng, k):
    nbr = [0] * k
    deg = [0] * k
    for i in range(k):
        deg[i] = rng.randint(0, 6)
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < 0.3:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
                deg[i] += 1
                deg[j] += 1
    return nbr, deg


def random_search_input(rng, n, p_n):
    host = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                host[u] |= 1 << v
                host[v] |= 1 << u
    back = []
    for d in range(p_n):
        b = 0
        for e in range(d):
            if rng.random() < 0.5:
                b |= 1 << e
        back.append(b)
    full = (1 << n) - 1
    filters = [full if rng.random() < 0.7 else rng.getrandbits(n) for _ in range(p_n)]
    return host, back, filters


def test_python_backend_always_present():
    assert "python" in _core.available_backends()


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        _core.use_backend("gpu")


@compiled
@given(st.integers(0, 10**9), st.integers(1, 12))
@settings(max_examples=300, deadline=None)
def test_min_ratio_equivalence(seed, k):
    from rooted_turan import _kernels

    nbr, deg = random_ratio_input(random.Random(seed), k)
    assert _kernels.min_ratio_enum(nbr, deg) == _fallback.min_ratio_enum(nbr, deg)


@compiled
@given(st.integers(0, 10**9), st.integers(1, 12), st.integers(1, 6))
@settings(max_examples=300, deadline=None)
def test_embed_search_equivalence(seed, n, p_n):
    from rooted_turan import _kernels

    host, back, filters = random_search_input(random.Random(seed), n, p_n)
    for limit in (3, 10**6):
        a = _kernels.embed_search(host, back, filters, limit, 0.0)
        b = _fallback.embed_search(host, back, filters, limit, 0.0)
        assert (a[0], list(a[1]) if a[1] is not None else None, a[2]) == (
            b[0],
            list(b[1]) if b[1] is not None else None,
            b[2],
        )


def test_wide_inputs_fall_back(backend):
    # 70 host vertices exceed the 64-bit kernel; dispatch must still work
    n = 70
    host = [0] * n
    for v in range(n - 1):
        host[v] |= 1 << (v + 1)
        host[v + 1] |= 1 << v
    status, imgs, _ = _core.embed_search(host, [0, 1, 2], [(1 << n) - 1] * 3, 10**6)
    assert status == _fallback.FOUND
    assert host[imgs[0]] >> imgs[1] & 1 and host[imgs[1]] >> imgs[2] & 1


def test_min_ratio_tie_break():
    # two isolated vertices of degree 1: singleton {0} beats {0,1} and {1}
    assert _fallback.min_ratio_enum([0, 0], [1, 1]) == (1, 1, 1)
