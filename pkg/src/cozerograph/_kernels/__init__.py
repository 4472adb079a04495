"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The compiled backend handles graphs with at most 64 vertices (uint64
adjacency masks); anything larger always runs on the pure backend.
``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

from . import _pure

try:
    from . import _speed  # type: ignore[attr-defined]
except ImportError:
    _speed = None

COMPILED_AVAILABLE = _speed is not None
COMPILED_MAX_VERTICES = 64


def backend_name() -> str:
    return "c" if COMPILED_AVAILABLE else "python"


def _impl(n: int):
    if _speed is not None and n <= COMPILED_MAX_VERTICES:
        return _speed
    return _pure


def girth(n: int, masks) -> int:
    """Shortest cycle length, 0 if acyclic."""
    return _impl(n).girth(n, list(masks))


def clique_number(n: int, masks) -> int:
    return _impl(n).clique_number(n, list(masks))


def chromatic_number(n: int, masks, lower: int = 0) -> int:
    return _impl(n).chromatic_number(n, list(masks), lower)


def domination_number(n: int, masks) -> int:
    return _impl(n).domination_number(n, list(masks))


def total_domination_number(n: int, masks) -> tuple[int, tuple[int, ...]]:
    return _pure.total_domination_number(n, list(masks))


def hamiltonian_cycle(n: int, masks) -> list[int] | None:
    return _impl(n).hamiltonian_cycle(n, list(masks))
