import random
from fractions import Fraction
from itertools import combinations

import pytest

from rooted_turan import _core, make_graph
from rooted_turan.density import is_balanced


@pytest.fixture(params=_core.available_backends())
def backend(request):
    prev = _core.use_backend(request.param)
    yield request.param
    _core.use_backend(prev)


def brute_min_rho(F):
    """Minimum of e_S/|S| over all nonempty non-root S, by direct edge scans."""
    free = F.nonroots
    best = None
    for r in range(1, len(free) + 1):
        for S in combinations(free, r):
            S = set(S)
            e = sum(1 for u, v in F.edges if u in S or v in S)
            q = Fraction(e, r)
            if best is None or q < best:
                best = q
    return best


def random_bipartite(rng, n_low=3, n_high=8, p=0.5):
    """Connected bipartite graph with a nonempty independent proper root set."""
    while True:
        n = rng.randint(n_low, n_high)
        side = [rng.randint(0, 1) for _ in range(n)]
        side[0] = 0
        side[1] = 1
        left = [v for v in range(n) if side[v] == 0]
        right = [v for v in range(n) if side[v] == 1]
        edges = {(u, v) for u in left for v in right if rng.random() < p}
        # tie components together with cross edges
        order = list(range(1, n))
        rng.shuffle(order)
        seen = [0]
        for v in order:
            partner = next((w for w in seen if side[w] != side[v]), None)
            if partner is not None and not any(v in e for e in edges):
                edges.add((min(v, partner), max(v, partner)))
            seen.append(v)
        G = make_graph(n, edges)
        if not G.is_connected():
            continue
        roots = []
        for v in rng.sample(range(n), n):
            if len(roots) >= n - 1:
                break
            if rng.random() < 0.5 and all(w not in G.adjacency[v] for w in roots):
                roots.append(v)
        if not roots:
            continue
        return make_graph(n, edges, roots)


def random_balanced_bipartite(rng, **kw):
    while True:
        F = random_bipartite(rng, **kw)
        if is_balanced(F).balanced:
            return F


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
