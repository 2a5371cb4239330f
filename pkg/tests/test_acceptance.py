"""Acceptance gate: one test per criterion, each timed against its limit.

Every test appends a ``PASS``/``FAIL`` line to ``RESULTS``; conftest prints
the lines in the pytest terminal summary.
"""

import functools
import json
import random
import time
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest

from rooted_turan import (
    ExpansionFails,
    HypothesisViolated,
    blow_up,
    complete,
    complete_bipartite,
    cycle,
    densify,
    dependent_random_choice,
    embed_D_blowup,
    expand_T47,
    exponent_of,
    extremal_number,
    find_subgraph,
    identify,
    is_balanced,
    is_isomorphic,
    make_graph,
    realise,
    realise_D,
    rho,
    star_matching,
    subdivide,
    tree_D,
    tree_H,
    tree_T,
)
from rooted_turan.lemmas import D_blowup_roles, T47_roles
from rooted_turan.oracle import brute_force_contains

from . import instances as inst
from .conftest import brute_min_rho, random_balanced_bipartite, random_bipartite
from .golden import cli_golden

RESULTS: list[str] = []

pytestmark = pytest.mark.acceptance


def criterion(number, title, limit):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                elapsed = time.perf_counter() - t0
                RESULTS.append(f"[{number}] FAIL {title} ({elapsed:.2f}s): {type(exc).__name__}: {exc}")
                raise
            elapsed = time.perf_counter() - t0
            ok = elapsed < limit
            RESULTS.append(
                f"[{number}] {'PASS' if ok else 'FAIL'} {title} ({elapsed:.2f}s, limit {limit}s){': ' + detail if detail else ''}"
            )
            assert ok, f"took {elapsed:.2f}s, limit {limit}s"

        return run

    return wrap


def edges_preserved(pattern, host, mapping):
    """Raw re-verification that does not go through the package's verifier."""
    if len(set(mapping)) != pattern.n:
        return False
    host_edges = {frozenset(e) for e in host.edges}
    return all(frozenset((mapping[u], mapping[v])) in host_edges for u, v in pattern.edges)


# -- 1 ------------------------------------------------------------------------


def balanced_corpus():
    base = []
    base += [(f"D({t},{s})", tree_D(t, s)) for t in range(1, 5) for s in range(1, 5)]
    base += [(f"T({a},{b})", tree_T(a, b)) for a in range(2, 6) for b in range(a + 1, 13)]
    base += [(f"H({t},{s})", tree_H(t, s)) for t in range(1, 4) for s in range(1, 4)]
    out = []
    for name, F in base:
        out += [
            (name, F),
            (f"sub {name}", subdivide(F)),
            (f"{name}_*(1)", densify(F, 1, starred=True)),
            (f"{name}^2", blow_up(F, 2)),
            (f"{name}^3", blow_up(F, 3)),
        ]
    return out


@criterion(1, "balancedness of D, T, H and their sub, F_*(1), F^2, F^3", 10)
def test_criterion_1_balancedness():
    corpus = balanced_corpus()
    bad = [name for name, F in corpus if not is_balanced(F, method="auto").balanced]
    assert not bad, bad
    return f"{len(corpus)} graphs balanced"


# -- 2 ------------------------------------------------------------------------


@criterion(2, "exact density identities", 30)
def test_criterion_2_density_identities():
    for t in range(1, 5):
        for s in range(1, 5):
            assert rho(tree_D(t, s)) == Fraction((t + 1) * (s + 1) - 1, t + 1)
    for t in range(1, 4):
        for s in range(1, 4):
            assert rho(tree_H(t, s)) == Fraction(1 + (s + 1) * t, 1 + s * t)
    rng = random.Random(2)
    for _ in range(50):
        F = random_balanced_bipartite(rng, n_low=3, n_high=9)
        # balance is also confirmed by the brute-force subset oracle
        assert brute_min_rho(F) >= rho(F)
        for t in (1, 2, 3):
            assert rho(densify(F, t)) == rho(F) + t
        a, b = len(F.nonroots), F.m
        assert rho(subdivide(F)) == Fraction(2 * b, a + b)
    return "D, H formulas; 50 random F for F(t) and sub(F)"


# -- 3 ------------------------------------------------------------------------


@criterion(3, "realisation of every coprime a < b <= 10", 5)
def test_criterion_3_realisation():
    count = dcount = 0
    for b in range(2, 11):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            F = realise(a, b).result
            assert F.is_connected() and F.is_bipartite() and F.roots_independent()
            assert is_balanced(F, method="auto").balanced
            assert rho(F) == Fraction(b, a)
            assert exponent_of(F) == 2 - Fraction(a, b)
            count += 1
            if a >= 2 and (b + 1) % a == 0 and (b + 1) // a >= 2:
                G = realise_D(a, b)
                assert rho(G) == rho(F)
                dcount += 1
    return f"{count} fractions, {dcount} D-family agreements"


# -- 4 ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "label",
    ["C6 in D(2,1)^2", "sub(K(2,3)) in D(2,1)^3", "C4 in identify-roots(T(3,5))"],
)
def test_criterion_4_containment(label):
    cases = {
        "C6 in D(2,1)^2": (blow_up(tree_D(2, 1), 2), cycle(6)),
        "sub(K(2,3)) in D(2,1)^3": (blow_up(tree_D(2, 1), 3), subdivide(complete_bipartite(2, 3))),
        "C4 in identify-roots(T(3,5))": (identify(tree_T(3, 5), 3, 5), cycle(4)),
    }

    @criterion(4, f"containment {label}", 1)
    def body():
        host, pattern = cases[label]
        emb = find_subgraph(host, pattern)
        assert emb is not None
        assert edges_preserved(pattern, host, emb.mapping)
        return f"map {list(emb.mapping)}"

    body()


# -- 5 ------------------------------------------------------------------------


@criterion(5, "constructive lemmas on 100 good and 100 bad instances each", 60)
def test_criterion_5_lemmas():
    rng = random.Random(5)
    for _ in range(100):
        H, E, A, B, k = inst.star_instance(rng, True)
        stars = star_matching(H, A, B, k)
        used = [x for _, leaves in stars for x in leaves]
        assert sorted(c for c, _ in stars) == sorted(A)
        assert len(used) == len(set(used)) == k * len(A) and set(used) <= set(B)
        assert all({c, x} in map(set, E) for c, leaves in stars for x in leaves)
        H, E, A, B, k = inst.star_instance(rng, False)
        with pytest.raises(ExpansionFails):
            star_matching(H, A, B, k)

    for _ in range(100):
        H, E, A, B, d, s, t = inst.drc_instance(rng, True)
        u, Ap = dependent_random_choice(H, A, B, d, s, t)
        assert inst.drc_conclusion(inst.adjacency(H.n, E), A, B, d, u, Ap, s, t)
        H, E, A, B, d, s, t = inst.drc_instance(rng, False)
        with pytest.raises(HypothesisViolated):
            dependent_random_choice(H, A, B, d, s, t)

    for _ in range(100):
        H, E, W, ell, t = inst.D_instance(rng, True)
        emb = embed_D_blowup(H, W, ell, t)
        P, _ = D_blowup_roles(t, len(W), ell)
        assert inst.embedding_ok(P, H.n, E, emb.mapping)
        H, E, W, ell, t = inst.D_instance(rng, False)
        with pytest.raises(HypothesisViolated):
            embed_D_blowup(H, W, ell, t)

    for _ in range(100):
        H, E, u1, A, B, ell = inst.T47_instance(rng, True)
        emb = expand_T47(H, u1, A, B, ell)
        P, _, _ = T47_roles(ell)
        assert inst.embedding_ok(P, H.n, E, emb.mapping)
        H, E, u1, A, B, ell = inst.T47_instance(rng, False)
        with pytest.raises(HypothesisViolated):
            expand_T47(H, u1, A, B, ell)
    return "4 lemmas x (100 + 100)"


# -- 6 ------------------------------------------------------------------------


def all_graphs_ex(n, F):
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if len(edges) > best and not brute_force_contains(make_graph(n, edges), F):
            best = len(edges)
    return best


@criterion(6, "oracle ground truth", 300)
def test_criterion_6_oracle():
    K3 = complete(3)
    for n in range(3, 9):
        res = extremal_number(n, K3)
        assert res.certified and res.max_edges == n * n // 4, (n, res.max_edges)
        assert not brute_force_contains(res.witness, K3)
    C4 = cycle(4)
    res = extremal_number(5, C4)
    assert res.certified and res.max_edges == all_graphs_ex(5, C4) == 6
    rng = random.Random(6)
    for _ in range(1000):
        hn, pn = rng.randint(1, 8), rng.randint(1, 5)
        p, q = rng.random(), rng.random()
        host = make_graph(hn, [(u, v) for u in range(hn) for v in range(u + 1, hn) if rng.random() < p])
        pattern = make_graph(pn, [(u, v) for u in range(pn) for v in range(u + 1, pn) if rng.random() < q])
        emb = find_subgraph(host, pattern)
        assert (emb is not None) == brute_force_contains(host, pattern)
        if emb is not None:
            assert edges_preserved(pattern, host, emb.mapping)
    return "Mantel n=3..8, ex(5,C4)=6 over 1024 graphs, 1000 fuzz agreements"


# -- 7 ------------------------------------------------------------------------


@criterion(7, "isomorphism family identities", 10)
def test_criterion_7_isomorphisms():
    for s in range(1, 5):
        assert is_isomorphic(tree_D(1, s), tree_T(2, 2 * s + 1))
        assert is_isomorphic(tree_D(2, s), tree_T(3, 3 * s + 2))
    rng = random.Random(7)
    for _ in range(20):
        F = random_bipartite(rng, 3, 8)
        assert F.roots_independent()
        for ell in (1, 2, 3):
            assert is_isomorphic(subdivide(blow_up(F, ell)), blow_up(subdivide(F), ell))
    return "8 family pairs, 20 random F x 3 values of ell"


# -- 8 ------------------------------------------------------------------------


@criterion(8, "CLI golden files", 10)
def test_criterion_8_cli():
    expected = json.loads((cli_golden.HERE / "expected.json").read_text())
    first = cli_golden.run_all()
    second = cli_golden.run_all()
    assert first == expected
    assert all(first[k]["stdout"] == second[k]["stdout"] for k in first)
    assert {v["exit"] for v in first.values()} == {0, 1, 2, 3}
    return f"{len(first)} cases, byte-stable"

