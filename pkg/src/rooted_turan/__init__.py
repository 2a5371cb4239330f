"""Rooted blow-ups, balanced rooted graphs and exact Turan-type exponents.

The hot loops (subset-density enumeration and embedding search) run in a
compiled Cython extension when it is built, and in pure Python otherwise;
see :mod:`rooted_turan._core`.
"""

from ._core import available_backends, backend, use_backend
from .constructions import (
    complete,
    complete_bipartite,
    construct,
    cycle,
    path,
    star,
    theta,
    tree_D,
    tree_H,
    tree_T,
)
from .density import BalanceReport, is_balanced, min_density_subset, min_density_subset_flow, rho, rho_subset
from .errors import *  # noqa: F401,F403
from .exponent import (
    ConstructionChain,
    ConstructionStep,
    chain_from_json,
    exponent_of,
    realise,
    realise_D,
    realise_mod1_chain,
    replay,
)
from .graph import Rational, RootedGraph, fmt_rational, graph_from_json, make_graph, parse_rational
from .host import HostGraph
from .lemmas import dependent_random_choice, embed_D_blowup, expand_T47, star_matching
from .operators import bipartition, blow_up, densify, identify, subdivide
from .oracle import ExtremalResult, exponent_fit, extremal_number, greedy_lower_bound, is_F_free
from .search import Embedding, SearchBudget, find_subgraph, is_isomorphic, verify_embedding

__version__ = "0.1.0"
