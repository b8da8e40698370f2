"""Exact packing S-coloring by backtracking with forward checking."""

from __future__ import annotations

import time

from ..graph import Graph, bfs_distances
from ..verifier import Coloring, as_sequence, verify_packing
from .common import Pin, SolveResult, normalize_pins


def _balls(g: Graph, s) -> list[list[list[int]]]:
    """``balls[v][i]``: vertices other than v within distance s_i of v."""
    radii = sorted(set(s.values))
    out = []
    for v in g.vertices():
        dist = bfs_distances(g, v, radius=radii[-1])
        by_class = []
        for i in s.classes():
            r = s.s(i)
            by_class.append(sorted(w for w, d in dist.items() if 0 < d <= r))
        out.append(by_class)
    return out


def decide_backtracking(g: Graph, s, pins: list[Pin] | None = None, budget: float | None = None,
                        symmetry_breaking: bool = True) -> SolveResult:
    """Decide packing S-colorability of ``g``.

    Vertices are tried in order of descending degree (ties by id) and classes
    in ascending index. After each assignment the class is removed from the
    domains of all vertices inside its ball; an emptied domain triggers a
    backtrack. Among classes with equal threshold, class i+1 may only be
    opened after class i (skipped for classes touched by pins).

    ``budget`` is a wall-clock limit in seconds; on expiry the result has
    status ``TIMEOUT``.
    """
    s = as_sequence(s)
    k = s.k
    pinned = normalize_pins(pins or [], g.n, k)
    full = (1 << (k + 1)) - 2  # bits 1..k
    domain = [full] * g.n
    for v, allowed in pinned.items():
        domain[v] = 0
        for c in allowed:
            domain[v] |= 1 << c
        if not domain[v]:
            return SolveResult("UNSAT", None, stats={"nodes": 0})

    balls = _balls(g, s)
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    # representative: first class of its equal-threshold group
    group_first = {}
    for i in s.classes():
        group_first[i] = i if i == 1 or s.s(i - 1) != s.s(i) else group_first[i - 1]
    pinned_classes = {c for allowed in pinned.values() for c in allowed}
    breakable = {
        i for i in s.classes()
        if symmetry_breaking and i != group_first[i]
        and not any(group_first[c] == group_first[i] for c in pinned_classes)
    }

    colors = [0] * g.n
    used = [0] * (k + 1)
    deadline = None if budget is None else time.monotonic() + budget
    nodes = 0
    trail: list[tuple[int, int]] = []

    # recursion depth is bounded by n; iterative search avoids stack limits
    pos = 0
    stack: list[list[int]] = []  # per depth: remaining candidate classes
    while True:
        if pos == len(order):
            break
        v = order[pos]
        if len(stack) == pos:
            cands = []
            dom = domain[v]
            for c in range(1, k + 1):
                if not dom >> c & 1:
                    continue
                if c in breakable and not used[c - 1]:
                    continue
                cands.append(c)
            stack.append(cands[::-1])
        else:
            # returning here after a failed child: undo the current assignment
            c = colors[v]
            colors[v] = 0
            used[c] -= 1
            while trail and trail[-1][0] == pos:
                _, w_bits = trail.pop()
                w, bit = w_bits >> 8, w_bits & 0xFF
                domain[w] |= 1 << bit
        cands = stack[pos]
        placed = False
        while cands:
            c = cands.pop()
            nodes += 1
            if deadline is not None and nodes & 0x3FF == 0 and time.monotonic() > deadline:
                return SolveResult("TIMEOUT", None, stats={"nodes": nodes, "budget": budget})
            ok = True
            for w in balls[v][c - 1]:
                if domain[w] >> c & 1:
                    domain[w] &= ~(1 << c)
                    trail.append((pos, (w << 8) | c))
                    if not domain[w] and not colors[w]:
                        ok = False
            # an already colored w in the ball would have removed c from v
            if ok:
                colors[v] = c
                used[c] += 1
                placed = True
                break
            while trail and trail[-1][0] == pos:
                _, w_bits = trail.pop()
                domain[w_bits >> 8] |= 1 << (w_bits & 0xFF)
        if placed:
            pos += 1
            continue
        stack.pop()
        if pos == 0:
            return SolveResult("UNSAT", None, stats={"nodes": nodes})
        pos -= 1

    coloring = Coloring(s, [colors[v] for v in g.vertices()])
    _check_witness(g, s, coloring, pinned)
    return SolveResult("SAT", coloring, stats={"nodes": nodes})


def _check_witness(g, s, coloring, pinned):
    bad = verify_packing(g, s, coloring)
    if bad:
        raise AssertionError(f"solver produced an invalid witness: {bad[0]}")
    for v, allowed in pinned.items():
        if coloring[v] not in allowed:
            raise AssertionError(f"witness ignores pin on vertex {v}")


def enumerate_colorings(g: Graph, s):
    """Brute-force generator over all k**n total assignments (tiny graphs only)."""
    from itertools import product

    s = as_sequence(s)
    for classes in product(range(1, s.k + 1), repeat=g.n):
        yield Coloring(s, classes)

