"""Shared plumbing for the constructive colorers: class names, surgery, step checks."""

from __future__ import annotations

import sys
from contextlib import contextmanager

from ..errors import InternalProofStepFailed
from ..graph import Graph, bfs_distances
from ..structure import block_cut_tree

# class indices under (1,1,2) and (1,1,2,4)
A, B, TWO, FOUR = 1, 2, 3, 4
RADIUS = {A: 1, B: 1, TWO: 2, FOUR: 4}


def other(c: int) -> int:
    """The other 1-class."""
    return B if c == A else A


def free_one_class(*taken: int | None) -> int:
    """First 1-class not in ``taken``."""
    for c in (A, B):
        if c not in taken:
            return c
    raise InternalProofStepFailed("both 1-classes are blocked", case="free-1-class")


def rotate(cycle, start: int, toward: int) -> list[int]:
    """The cycle as a list beginning ``start, toward, ...``."""
    cyc = list(cycle)
    i = cyc.index(start)
    seq = cyc[i:] + cyc[:i]
    if len(seq) > 1 and seq[1] != toward:
        seq = [seq[0]] + seq[:0:-1]
    if len(seq) > 1 and seq[1] != toward:
        raise InternalProofStepFailed(f"{toward} does not follow {start} on the cycle", case="rotate")
    return seq


def alternate(vertices, first: int) -> dict[int, int]:
    out = {}
    c = first
    for v in vertices:
        out[v] = c
        c = other(c)
    return out


def reduce_graph(g: Graph, drop=(), add=()) -> tuple[Graph, list[int]]:
    """``g`` minus ``drop`` plus the edges ``add`` (given in old ids), with old-id map."""
    sub, old_of_new = g.without(drop)
    new_of_old = {v: i for i, v in enumerate(old_of_new)}
    extra = [(new_of_old[a], new_of_old[b]) for a, b in add if not sub.has_edge(new_of_old[a], new_of_old[b])]
    return (sub.with_edges(extra) if extra else sub), old_of_new


def pull(sub_colors, old_of_new, n: int) -> list[int | None]:
    out: list[int | None] = [None] * n
    for i, c in enumerate(sub_colors):
        out[old_of_new[i]] = c
    return out


@contextmanager
def deep_recursion(n: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 40 * n + 1000))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def check_step(g: Graph, col, touched, case: str, feasible: bool) -> None:
    """Re-verify every constraint involving a vertex in ``touched``.

    Packing distances are checked by breadth-first search around each touched
    vertex. With ``feasible`` set, conditions (A) and (B) are re-checked too.
    Raises :class:`InternalProofStepFailed` naming ``case``.
    """
    touched = [v for v in touched if col[v] is not None]
    for v in touched:
        c = col[v]
        for w, d in bfs_distances(g, v, radius=RADIUS[c]).items():
            if w != v and col[w] == c:
                raise InternalProofStepFailed(
                    f"class {c} on {v} and {w} at distance {d}", case=case)
    if not feasible:
        return
    for v in touched:
        if col[v] == FOUR or (col[v] == TWO and g.degree(v) <= 2):
            for w, d in bfs_distances(g, v, radius=2).items():
                if w == v:
                    continue
                if col[v] == FOUR and col[w] == TWO and g.degree(w) <= 2:
                    raise InternalProofStepFailed(f"(B) fails at {w} near {v}", case=case)
                if col[v] == TWO and col[w] == FOUR:
                    raise InternalProofStepFailed(f"(B) fails at {v} near {w}", case=case)
    if any(col[v] == FOUR for v in touched):
        for b in block_cut_tree(g).blocks:
            if sum(1 for v in b.vertices if col[v] == FOUR) > 1:
                raise InternalProofStepFailed("(A) fails: two class-4 vertices in one block", case=case)
