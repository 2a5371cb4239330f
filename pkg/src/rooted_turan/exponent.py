"""Maps from a rational exponent ``2 - a/b`` to a balanced rooted graph of density ``b/a``.

Three routes are provided:

* :func:`realise` follows the induction on ``a + b``: stars for ``a = 1``,
  a starred densification when ``b > 2a``, a 1-subdivision when ``a < b < 2a``.
* :func:`realise_D` returns the tree ``D(t-1, s-1)`` when ``b = st - 1``.
* :func:`realise_mod1_chain` densifies a rooted path when ``b = 1 (mod a)``.

The recursion always emits the base rooted graph; blowing it up is left to
the caller. Tightness of ``2 - a/b`` for the general recursion is only
conjectural, which :attr:`ConstructionChain.status` records.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .constructions import path, star, tree_D
from .density import rho
from .errors import BadCongruence, BadFraction, ValidationError, ZeroDensity
from .graph import RootedGraph, dumps_canonical, fmt_rational, graph_from_json
from .operators import densify, subdivide

CONJECTURAL = "conjectured upper bound, proven lower-bound family"
PROVEN = "proven"


def exponent_of(F: RootedGraph) -> Fraction:
    """The exponent ``2 - 1/rho(F)``."""
    r = rho(F)
    if r <= 0:
        raise ZeroDensity("graph has density zero")
    return 2 - 1 / r


@dataclass(frozen=True)
class ConstructionStep:
    kind: str  # "base", "densify" or "subdivide"
    rho_after: Fraction
    k: int | None = None
    family: str = "star"

    @property
    def exponent_after(self) -> Fraction:
        return 2 - 1 / self.rho_after

    def to_json(self) -> dict:
        if self.kind != "base":
            return {"kind": self.kind}
        out = {"kind": "base", "k": self.k}
        if self.family != "star":
            out["family"] = self.family
        return out


@dataclass(frozen=True)
class ConstructionChain:
    steps: tuple[ConstructionStep, ...]
    result: RootedGraph
    status: str = CONJECTURAL

    @property
    def rho(self) -> Fraction:
        return self.steps[-1].rho_after

    @property
    def exponent(self) -> Fraction:
        return self.steps[-1].exponent_after

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "rho": fmt_rational(self.rho),
            "exponent": fmt_rational(self.exponent),
            "graph": self.result.to_json(),
        }

    def dumps(self) -> str:
        return dumps_canonical(self.to_json())


def _base_graph(family: str, k: int) -> RootedGraph:
    if family == "star":
        return star(k)
    if family == "path":
        return path(k)
    raise ValidationError(f"unknown base family {family!r}")


def _apply(G: RootedGraph | None, step) -> RootedGraph:
    if isinstance(step, ConstructionStep):
        step = step.to_json()
    kind = step.get("kind")
    if kind == "base":
        if G is not None:
            raise ValidationError("base step must come first")
        return _base_graph(step.get("family", "star"), int(step["k"]))
    if G is None:
        raise ValidationError("chain must start with a base step")
    if kind == "densify":
        return densify(G, 1, starred=True)
    if kind == "subdivide":
        return subdivide(G)
    raise ValidationError(f"unknown step kind {kind!r}")


def replay(steps) -> RootedGraph:
    """Rebuild the graph described by a step list (dicts or :class:`ConstructionStep`)."""
    G = None
    for step in steps:
        G = _apply(G, step)
    if G is None:
        raise ValidationError("empty chain")
    return G


def chain_from_json(data: dict) -> ConstructionChain:
    """Parse and replay a chain; an embedded graph must match the replay exactly."""
    G = None
    steps = []
    for step in data.get("steps", []):
        G = _apply(G, step)
        steps.append(ConstructionStep(step["kind"], rho(G), step.get("k"), step.get("family", "star")))
    if G is None:
        raise ValidationError("empty chain")
    if "graph" in data and graph_from_json(data["graph"]) != G:
        raise ValidationError("chain graph does not match its replayed steps")
    status = PROVEN if steps[0].family == "path" else CONJECTURAL
    return ConstructionChain(tuple(steps), G, status)


def _check_fraction(a: int, b: int) -> tuple[int, int]:
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (a, b)) or a <= 0 or b <= 0 or a >= b:
        raise BadFraction(f"need integers 0 < a < b, got a={a!r}, b={b!r}")
    g = gcd(a, b)
    return a // g, b // g


def realise_steps(a: int, b: int) -> list[tuple[str, int | None]]:
    """The step plan for ``(a, b)`` without building graphs."""
    plan: list[tuple[str, int | None]] = []
    a, b = _check_fraction(a, b)
    while a != 1:
        if b > 2 * a:
            plan.append(("densify", None))
            a, b = _check_fraction(a, b - a)
        else:
            # a < b < 2a after reduction (b = 2a forces a = 1)
            plan.append(("subdivide", None))
            a, b = _check_fraction(2 * a - b, b)
    plan.append(("base", b))
    plan.reverse()
    return plan


def realise(a: int, b: int) -> ConstructionChain:
    """Balanced rooted graph of density ``b/a`` built by stars, subdivisions and densifications."""
    steps = []
    G = None
    for kind, k in realise_steps(a, b):
        if kind == "base":
            G = star(k)
        elif kind == "densify":
            G = densify(G, 1, starred=True)
        else:
            G = subdivide(G)
        steps.append(ConstructionStep(kind, rho(G), k))
    return ConstructionChain(tuple(steps), G, CONJECTURAL)


def realise_D(a: int, b: int) -> RootedGraph:
    """``D(t-1, s-1)`` with ``t = a`` and ``s = (b+1)/a``; density ``b/a``."""
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (a, b)) or a < 2 or b <= a:
        raise BadFraction(f"need integers 2 <= a < b, got a={a!r}, b={b!r}")
    if (b + 1) % a:
        raise BadCongruence(f"{b} is not -1 modulo {a}")
    s = (b + 1) // a
    if s < 2:
        raise BadCongruence("need b >= 2a - 1")
    return tree_D(a - 1, s - 1)


def realise_mod1_chain(a: int, b: int) -> ConstructionChain:
    """Rooted path of length ``a+1`` followed by ``(b-a-1)/a`` starred densifications."""
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (a, b)) or a < 2 or b <= a:
        raise BadFraction(f"need integers 2 <= a < b, got a={a!r}, b={b!r}")
    if b % a != 1:
        raise BadCongruence(f"{b} is not 1 modulo {a}")
    G = path(a + 1)
    steps = [ConstructionStep("base", rho(G), a + 1, "path")]
    for _ in range((b - a - 1) // a):
        G = densify(G, 1, starred=True)
        steps.append(ConstructionStep("densify", rho(G)))
    return ConstructionChain(tuple(steps), G, PROVEN)
