"""Kernel selection: the compiled extension when importable, else pure Python.

Callers go through :func:`min_ratio_enum` and :func:`embed_search`, which route
inputs that exceed the 64-bit mask width to the Python kernels automatically.
"""

from __future__ import annotations

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_backend = "compiled" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return ["compiled", "python"] if _compiled is not None else ["python"]


def backend() -> str:
    return _backend


def use_backend(name: str) -> str:
    """Select ``"compiled"`` or ``"python"``; returns the previous choice."""
    global _backend
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _compiled is None:
        raise RuntimeError("compiled kernels are not available")
    prev, _backend = _backend, name
    return prev


def min_ratio_enum(nbr: list[int], deg: list[int]) -> tuple[int, int, int]:
    if _backend == "compiled" and len(nbr) <= 62:
        return _compiled.min_ratio_enum(nbr, deg)
    return _fallback.min_ratio_enum(nbr, deg)


def embed_search(host_adj, back, filters, node_limit: int, deadline: float = 0.0):
    if _backend == "compiled" and len(host_adj) <= 64 and len(back) <= 64:
        return _compiled.embed_search(host_adj, back, filters, int(node_limit), float(deadline))
    return _fallback.embed_search(host_adj, back, filters, node_limit, deadline)
