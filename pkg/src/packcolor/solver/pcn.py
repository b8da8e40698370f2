"""Packing chromatic number by increasing k."""

from __future__ import annotations

import time

from ..errors import SolverTimeout
from ..graph import Graph
from .backtrack import decide_backtracking


def packing_chromatic_number(g: Graph, k_max: int, budget: float | None = None) -> int | None:
    """Smallest k <= k_max admitting a packing (1, 2, ..., k)-coloring, else None.

    ``budget`` bounds the total wall-clock time in seconds; exceeding it
    raises :class:`SolverTimeout`.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if g.n == 0:
        return 0
    deadline = None if budget is None else time.monotonic() + budget
    for k in range(1, k_max + 1):
        remaining = None if deadline is None else max(0.0, deadline - time.monotonic())
        res = decide_backtracking(g, tuple(range(1, k + 1)), budget=remaining)
        if res.status == "TIMEOUT":
            raise SolverTimeout(f"no decision for k={k} within {budget} s")
        if res.sat:
            return k
    return None
