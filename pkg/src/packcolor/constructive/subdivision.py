"""Colorings of the subdivision D(G) and relabelling into tighter sequences."""

from __future__ import annotations

from ..errors import InvalidInputColoring, NoInjection
from ..graph import Graph, subdivide
from ..verifier import Coloring, ColorSequence, as_sequence, verify_packing


def lift_to_subdivision(g: Graph, s, c: Coloring) -> tuple[ColorSequence, Coloring]:
    """Turn a packing S-coloring of ``g`` into one of D(G).

    The new sequence is ``(1, 2 s_1 + 1, ..., 2 s_k + 1)``: every midpoint
    takes the new class 1, and an original vertex of class ``i`` takes class
    ``i + 1``. Distances between original vertices double in D(G), and no
    two midpoints are adjacent. The coloring is indexed like
    ``subdivide(g).graph``.
    """
    s = as_sequence(s)
    if len(c) != g.n or not c.is_total:
        raise InvalidInputColoring("coloring must be total on the graph")
    if c.sequence.values != s.values:
        raise InvalidInputColoring(f"coloring is for {c.sequence}, not {s}")
    bad = verify_packing(g, s, c)
    if bad:
        raise InvalidInputColoring(f"input coloring is not a packing coloring: {bad[0]}")
    lifted = ColorSequence((1,) + tuple(2 * x + 1 for x in s.values))
    sm = subdivide(g)
    classes = [1] * sm.graph.n
    for v in g.vertices():
        classes[sm.vertex_map[v]] = c[v] + 1
    return lifted, Coloring(lifted, classes)


def remap_sequence(c: Coloring, s, s_target) -> Coloring:
    """Relabel ``c`` into ``s_target`` via an injection that never raises a threshold.

    Used classes are matched in ascending threshold order to target slots in
    ascending order; this greedy matching succeeds whenever any valid
    injection exists. Raises :class:`NoInjection` otherwise.
    """
    s = as_sequence(s)
    t = as_sequence(s_target)
    used = sorted(c.used_classes(), key=lambda i: (s.s(i), i))
    if len(used) > t.k:
        raise NoInjection(f"{len(used)} classes in use, target has {t.k}")
    sigma = {}
    for slot, i in zip(t.classes(), used):
        if t.s(slot) > s.s(i):
            raise NoInjection(f"class {i} (s={s.s(i)}) cannot map to slot {slot} (s={t.s(slot)})")
        sigma[i] = slot
    return Coloring(t, [None if x is None else sigma[x] for x in c.classes])
