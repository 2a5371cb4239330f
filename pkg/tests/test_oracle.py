import json
from itertools import combinations

import pytest

from rooted_turan import (
    DegenerateFit,
    SearchBudget,
    complete,
    cycle,
    exponent_fit,
    extremal_number,
    greedy_lower_bound,
    is_F_free,
    make_graph,
    path,
)
from rooted_turan.oracle import FIT_LABEL, brute_force_contains

K2 = complete(2)
K3 = complete(3)
C4 = cycle(4)

PETERSEN = make_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


def all_graphs_ex(n, F):
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if len(edges) <= best:
            continue
        if not brute_force_contains(make_graph(n, edges), F):
            best = len(edges)
    return best


def test_is_F_free():
    assert is_F_free(cycle(5), C4)
    assert not is_F_free(complete(4), K3)
    assert is_F_free(PETERSEN, C4)


@pytest.mark.parametrize("n", range(3, 9))
def test_mantel(n):
    res = extremal_number(n, K3)
    assert res.certified and res.max_edges == n * n // 4
    assert res.witness.m == res.max_edges
    assert not brute_force_contains(res.witness, K3)


def test_small_values():
    assert extremal_number(5, K3).max_edges == 6
    assert extremal_number(5, C4).max_edges == 6
    for n in (1, 4, 7):
        assert extremal_number(n, K2).max_edges == 0


@pytest.mark.parametrize("n,F", [(5, C4), (5, K3), (4, path(2, rooted=False)), (5, complete(4))])
def test_against_all_graphs(n, F):
    assert extremal_number(n, F).max_edges == all_graphs_ex(n, F)


def test_monotone():
    prev = 0
    for n in range(2, 9):
        v = extremal_number(n, C4).max_edges
        assert v >= prev
        prev = v
    # C4 contains P3, so forbidding C4 leaves more room
    for n in range(3, 8):
        assert extremal_number(n, path(2, rooted=False)).max_edges <= extremal_number(n, C4).max_edges


def test_greedy_sandwich():
    for seed in range(5):
        g = greedy_lower_bound(5, K3, seed)
        assert 4 <= g <= 6
        assert greedy_lower_bound(6, C4, seed) <= extremal_number(6, C4).max_edges
    assert greedy_lower_bound(6, K2, 1) == 0


def test_uncertified_is_qualified():
    res = extremal_number(8, C4, SearchBudget(node_limit=50))
    assert not res.certified
    data = json.loads(res.dumps())
    assert data["qualifier"] == "lower bound only"
    assert "lower bound only" in res.summary()
    assert not brute_force_contains(res.witness, C4)


def test_fit():
    fit = exponent_fit(K3, range(4, 9))
    assert abs(fit["slope"] - 2) <= 0.2
    assert fit["label"] == FIT_LABEL
    fit = exponent_fit(C4, range(5, 10))
    assert len(fit["points"]) == 5
    with pytest.raises(DegenerateFit):
        exponent_fit(K2, range(3, 6))
