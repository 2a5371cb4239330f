"""Density functional and balancedness of rooted graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import networkx as nx

from . import _core
from .errors import BudgetExceeded, EmptySubset, SubsetTouchesRoots, ValidationError
from .graph import RootedGraph

DEFAULT_BUDGET = 24
AUTO_PYTHON_CAP = 12  # enumeration/flow crossover for the pure-Python kernel


def incident_edge_count(F: RootedGraph, S: Iterable[int]) -> int:
    """Number of edges of ``F`` with at least one endpoint in ``S``."""
    S = set(S)
    return sum(1 for u, v in F.edges if u in S or v in S)


def rho_subset(F: RootedGraph, S: Iterable[int]) -> Fraction:
    S = set(S)
    if not S:
        raise EmptySubset("subset must be nonempty")
    bad = sorted(v for v in S if v in F.roots or not 0 <= v < F.n)
    if bad:
        raise SubsetTouchesRoots("subset must consist of non-root vertices", bad)
    return Fraction(incident_edge_count(F, S), len(S))


def rho(F: RootedGraph) -> Fraction:
    """Density of the whole non-root part."""
    return rho_subset(F, F.nonroots)


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    rho: Fraction
    min_rho: Fraction
    witness: frozenset[int] | None

    def __bool__(self) -> bool:
        return self.balanced

    def __iter__(self):
        # unpacks as (flag, witness) where witness is (set, value) or None
        yield self.balanced
        yield None if self.witness is None else (self.witness, self.min_rho)


def min_density_subset(F: RootedGraph, budget: int = DEFAULT_BUDGET) -> tuple[frozenset[int], Fraction]:
    """Exhaustive minimiser of ``rho_F(S)`` over nonempty non-root ``S``.

    Ties go to the smaller set, then to the set with the smaller index mask.
    """
    free = F.nonroots
    if len(free) > budget:
        raise BudgetExceeded(
            f"{len(free)} non-root vertices exceed the enumeration budget of {budget}",
            {"nonroots": len(free), "budget": budget},
        )
    index = {v: i for i, v in enumerate(free)}
    nbr = [0] * len(free)
    for v, i in index.items():
        for w in F.adjacency[v]:
            if w in index:
                nbr[i] |= 1 << index[w]
    deg = [F.degree(v) for v in free]
    e, size, mask = _core.min_ratio_enum(nbr, deg)
    subset = frozenset(free[i] for i in range(len(free)) if mask >> i & 1)
    return subset, Fraction(e, size)


def _min_excess_cut(F: RootedGraph, lam: Fraction) -> tuple[int, frozenset[int]]:
    """Minimise ``q*e_S - p*|S|`` for ``lam = p/q`` via a project-selection min cut.

    Returns the minimum value and a minimiser (possibly empty).
    """
    p, q = lam.numerator, lam.denominator
    free = F.nonroots
    G = nx.DiGraph()
    G.add_node("s")
    G.add_node("t")
    for v in free:
        G.add_edge("s", ("v", v), capacity=p)
    for idx, (u, v) in enumerate(F.edges):
        ends = [x for x in (u, v) if x not in F.roots]
        if not ends:
            continue
        G.add_edge(("e", idx), "t", capacity=q)
        for x in ends:
            G.add_edge(("v", x), ("e", idx))  # infinite capacity
    cut, (source_side, _) = nx.minimum_cut(G, "s", "t")
    chosen = frozenset(node[1] for node in source_side if isinstance(node, tuple) and node[0] == "v")
    return cut - p * len(free), chosen


def min_density_subset_flow(F: RootedGraph) -> tuple[frozenset[int], Fraction]:
    """Exact minimum of ``rho_F(S)`` by Dinkelbach iteration over min cuts.

    No size cap; used for graphs beyond the enumeration budget and as an
    independent cross-check of the enumeration kernel.
    """
    free = F.nonroots
    if not free:
        raise ValidationError("graph has no non-root vertices")
    best_set = frozenset(free)
    lam = rho(F)
    while True:
        value, chosen = _min_excess_cut(F, lam)
        if value >= 0 or not chosen:
            return best_set, lam
        best_set = chosen
        lam = rho_subset(F, chosen)


def is_balanced(F: RootedGraph, budget: int = DEFAULT_BUDGET, method: str = "enumerate") -> BalanceReport:
    """Decide whether every nonempty non-root subset is at least as dense as the whole.

    ``method`` is ``"enumerate"`` (exhaustive, capped by ``budget``), ``"flow"``
    (min-cut based, uncapped) or ``"auto"``, which enumerates up to ``budget``
    non-roots with the compiled kernel (12 with the Python one) and uses flow
    beyond. Both are exact; only the witness choice among ties may differ.
    """
    whole = rho(F)
    if method == "auto":
        cap = budget if _core.backend() == "compiled" else min(budget, AUTO_PYTHON_CAP)
        method = "enumerate" if len(F.nonroots) <= cap else "flow"
    if method == "enumerate":
        subset, low = min_density_subset(F, budget)
    elif method == "flow":
        subset, low = min_density_subset_flow(F)
    else:
        raise ValueError(f"unknown method {method!r}")
    if low >= whole:
        return BalanceReport(True, whole, whole, None)
    return BalanceReport(False, whole, low, subset)
