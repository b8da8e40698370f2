"""Named graphs from the counterexample constructions, plus random generators.

Every constructor returns a :class:`LabeledGraph` whose ``labels`` table maps
the customary vertex names (``u1``, ``y6``, ``z6`` ...) to vertex ids. Vertices
without a customary name get names mirroring their named counterparts.
Copies of sub-gadgets are addressed with a prefix, e.g. ``G1[s].u6``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InfeasibleRequest
from .graph import Graph, all_pairs_distances, bfs_distances, from_edge_list, is_subcubic


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, int]

    def __getitem__(self, label: str) -> int:
        return self.labels[label]

    def ids(self, *names: str) -> list[int]:
        return [self.labels[x] for x in names]

    def with_prefix(self, prefix: str) -> list[int]:
        return sorted(v for k, v in self.labels.items() if k.startswith(prefix))


class _Builder:
    def __init__(self):
        self.labels: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.n = 0

    def vertex(self, label: str) -> int:
        if label in self.labels:
            raise ValueError(f"duplicate label {label}")
        self.labels[label] = self.n
        self.n += 1
        return self.n - 1

    def edge(self, a: str, b: str):
        self.edges.append((self.labels[a], self.labels[b]))

    def path(self, *names: str):
        for a, b in zip(names, names[1:]):
            self.edge(a, b)

    def triangle(self, a: str, b: str, c: str):
        self.path(a, b, c, a)

    def graft(self, sub: LabeledGraph, prefix: str) -> None:
        base = self.n
        for name, v in sub.labels.items():
            self.labels[prefix + name] = base + v
        self.n += sub.graph.n
        self.edges += [(base + u, base + v) for u, v in sub.graph.edges]

    def unit(self, names: list[str]):
        """Double-triangle unit a1..a6 on the given six labels."""
        for x in names:
            self.vertex(x)
        a1, a2, a3, a4, a5, a6 = names
        self.triangle(a1, a2, a3)
        self.triangle(a4, a5, a6)
        self.edge(a2, a4)
        self.edge(a3, a5)

    def build(self) -> LabeledGraph:
        return LabeledGraph(from_edge_list(self.n, self.edges), dict(self.labels))


def _check(cond: bool, what: str):
    if not cond:
        raise AssertionError(f"gadget transcription check failed: {what}")


def _dist(lg: LabeledGraph, a: str, b: str) -> float:
    return bfs_distances(lg.graph, lg[a]).get(lg[b], float("inf"))


def _has_triangle(lg: LabeledGraph, a: str, b: str, c: str) -> bool:
    g = lg.graph
    x, y, z = lg.ids(a, b, c)
    return g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z)


# --- small named graphs ----------------------------------------------------


def example_c4_two_ears() -> LabeledGraph:
    """Four-cycle u1u2u3u4 with ears u1v1u2 and u3v2u4."""
    b = _Builder()
    for x in ("u1", "u2", "u3", "u4", "v1", "v2"):
        b.vertex(x)
    b.path("u1", "u2", "u3", "u4", "u1")
    b.path("u1", "v1", "u2")
    b.path("u3", "v2", "u4")
    lg = b.build()
    _check(lg.graph.n == 6 and lg.graph.m == 8, "6 vertices, 8 edges")
    _check(all_pairs_distances(lg.graph).diameter() == 3, "diameter 3")
    _check(_has_triangle(lg, "u1", "u2", "v1") and _has_triangle(lg, "u3", "u4", "v2"), "two triangles")
    return lg


def double_triangle_unit() -> LabeledGraph:
    b = _Builder()
    b.unit([f"a{i}" for i in range(1, 7)])
    lg = b.build()
    _check([lg.graph.degree(v) for v in lg.ids(*(f"a{i}" for i in range(1, 7)))] == [2, 3, 3, 3, 3, 2],
           "unit degree sequence")
    _check(_dist(lg, "a1", "a6") == 3, "dist(a1, a6) = 3")
    return lg


def petersen() -> LabeledGraph:
    b = _Builder()
    for i in range(5):
        b.vertex(f"o{i}")
    for i in range(5):
        b.vertex(f"i{i}")
    for i in range(5):
        b.edge(f"o{i}", f"o{(i + 1) % 5}")
        b.edge(f"i{i}", f"i{(i + 2) % 5}")
        b.edge(f"o{i}", f"i{i}")
    lg = b.build()
    _check(lg.graph.n == 10 and lg.graph.m == 15, "Petersen size")
    return lg


# --- G1, G2, G -------------------------------------------------------------


def gadget_g1(with_pendant: bool = False) -> LabeledGraph:
    """Hub w1 joined to the attachment ends u1, v1 of two double-triangle units.

    With ``with_pendant`` the hub also gets the pendant vertex z6.
    """
    b = _Builder()
    b.vertex("w1")
    b.unit([f"u{i}" for i in range(1, 7)])
    b.unit([f"v{i}" for i in range(1, 7)])
    b.edge("w1", "u1")
    b.edge("w1", "v1")
    if with_pendant:
        b.vertex("z6")
        b.edge("z6", "w1")
    lg = b.build()
    _check(lg.graph.n == (14 if with_pendant else 13), "G1 vertex count")
    for tri in (("u1", "u2", "u3"), ("u4", "u5", "u6"), ("v1", "v2", "v3"), ("v4", "v5", "v6")):
        _check(_has_triangle(lg, *tri), f"triangle {tri}")
    _check(_dist(lg, "u1", "v1") == 2, "dist(u1, v1) = 2")
    if with_pendant:
        d = bfs_distances(lg.graph, lg["z6"])
        far = sorted(v for v, x in d.items() if x == max(d.values()))
        _check(max(d.values()) == 5 and far == sorted(lg.ids("u6", "v6")),
               "farthest vertices from z6 are u6, v6 at distance 5")
    return lg


def gadget_g2(with_pendant: bool = False) -> LabeledGraph:
    """Hub x4 with two units (t, y); each far end branches into two units that
    each end at the hub of a G1 copy.

    Right side: y-unit, branch vertex ``br``, units s1..s6 and z1..z6 whose
    far ends s6, z6 meet copies ``G1[s]``, ``G1[z]``. The left side mirrors it
    with t1..t6, ``bl``, ``ls1..ls6``, ``lz1..lz6`` and copies ``G1[ls]``,
    ``G1[lz]``. With ``with_pendant`` the hub also gets pendant x1.
    """
    b = _Builder()
    b.vertex("x4")
    b.unit([f"t{i}" for i in range(1, 7)])
    b.unit([f"y{i}" for i in range(1, 7)])
    b.edge("x4", "t1")
    b.edge("x4", "y1")
    g1 = gadget_g1(with_pendant=False)
    for side, end, branch, units in (
        ("r", "y6", "br", ("s", "z")),
        ("l", "t6", "bl", ("ls", "lz")),
    ):
        b.vertex(branch)
        b.edge(end, branch)
        for u in units:
            b.unit([f"{u}{i}" for i in range(1, 7)])
            b.edge(branch, f"{u}1")
            b.graft(g1, f"G1[{u}].")
            b.edge(f"{u}6", f"G1[{u}].w1")
    if with_pendant:
        b.vertex("x1")
        b.edge("x1", "x4")
    lg = b.build()
    _check(lg.graph.n == (92 if with_pendant else 91), "G2 vertex count 91 (+ pendant)")
    _check(_has_triangle(lg, "y1", "y2", "y3") and _has_triangle(lg, "t1", "t2", "t3"), "y/t triangles")
    _check(_dist(lg, "y1", "t1") == 2, "dist(y1, t1) = 2")
    _check(_has_triangle(lg, "s1", "s2", "s3") and _has_triangle(lg, "z1", "z2", "z3"), "s/z triangles")
    _check(_dist(lg, "z1", "s1") == 2, "z1 and s1 are close")
    _check(_dist(lg, "y4", "z4") == 5 and _dist(lg, "y4", "z5") == 5, "z4, z5 at distance 5 from y4")
    return lg


def gadget_big_g() -> LabeledGraph:
    """Triangle x1x2x3 with a G2 copy hanging from each corner (at its hub x4)."""
    b = _Builder()
    corners = ("x1", "x2", "x3")
    for x in corners:
        b.vertex(x)
    b.triangle(*corners)
    g2 = gadget_g2(with_pendant=False)
    for x in corners:
        b.graft(g2, f"G2[{x}].")
        b.edge(x, f"G2[{x}].x4")
    lg = b.build()
    _check(lg.graph.n == 276, "G has 276 vertices")
    _check(all(lg.graph.degree(lg[x]) == 3 for x in corners), "corners have degree 3")
    return lg


# --- G3, H -----------------------------------------------------------------


def gadget_g3(with_pendant: bool = False) -> LabeledGraph:
    """Central triangle u1u2u3 with a binary tree of triangles below u3 and u2.

    Right: u3-u4 bridges to triangle u4u5u6; u5-u7 to u7u8u9; u6-u10 to
    u10u11u12. Left mirrors this with primed labels below u2. With
    ``with_pendant`` u1 gets the pendant v3.
    """
    b = _Builder()
    for x in ("u1", "u2", "u3"):
        b.vertex(x)
    b.triangle("u1", "u2", "u3")
    for p, top in (("", "u3"), ("'", "u2")):
        names = [f"u{i}{p}" for i in range(4, 13)]
        for x in names:
            b.vertex(x)
        b.triangle(*names[0:3])
        b.triangle(*names[3:6])
        b.triangle(*names[6:9])
        b.edge(top, f"u4{p}")
        b.edge(f"u5{p}", f"u7{p}")
        b.edge(f"u6{p}", f"u10{p}")
    if with_pendant:
        b.vertex("v3")
        b.edge("v3", "u1")
    lg = b.build()
    _check(lg.graph.n == (22 if with_pendant else 21), "G3 vertex count 21 (+ pendant)")
    _check(_dist(lg, "u1", "u4") == 2 and _dist(lg, "u4", "u7") == 2, "dist(u1,u4) = dist(u4,u7) = 2")
    if with_pendant:
        _check(_dist(lg, "v3", "u4") == 3, "dist(v3, u4) = 3")
    return lg


def gadget_h() -> LabeledGraph:
    """Triangle v1v2v3 with a G3 copy hanging from each corner (at its u1)."""
    b = _Builder()
    corners = ("v1", "v2", "v3")
    for x in corners:
        b.vertex(x)
    b.triangle(*corners)
    g3 = gadget_g3(with_pendant=False)
    for x in corners:
        b.graft(g3, f"G3[{x}].")
        b.edge(x, f"G3[{x}].u1")
    lg = b.build()
    _check(lg.graph.n == 66, "H has 66 vertices")
    _check(_has_triangle(lg, *corners), "v1v2v3 is a triangle")
    return lg


GADGETS = {
    "ex13": example_c4_two_ears,
    "unit": double_triangle_unit,
    "g1": gadget_g1,
    "g2": gadget_g2,
    "bigg": gadget_big_g,
    "g3": gadget_g3,
    "h": gadget_h,
    "petersen": petersen,
}


# --- random subcubic outerplanar graphs --------------------------------------


def _grow_block(rng: random.Random, size: int) -> tuple[list[tuple[int, int]], int]:
    """2-connected subcubic outerplane block on about ``size`` (>= 3) vertices.

    Starts from a cycle and repeatedly glues a path of new vertices onto an
    outer edge whose ends both have degree 2; that edge becomes a chord.
    """
    first = rng.randint(3, max(3, min(size, 7)))
    cycle = list(range(first))
    edges = {(i, (i + 1) % first) if i < (i + 1) % first else ((i + 1) % first, i) for i in range(first)}
    deg = [2] * first
    n = first
    stale = 0
    while n < size and stale < 20:
        candidates = [i for i in range(len(cycle))
                      if deg[cycle[i]] == 2 and deg[cycle[(i + 1) % len(cycle)]] == 2]
        if not candidates:
            break
        i = rng.choice(candidates)
        u, v = cycle[i], cycle[(i + 1) % len(cycle)]
        k = rng.randint(1, max(1, min(4, size - n)))
        if n + k > size:
            stale += 1
            continue
        new = list(range(n, n + k))
        n += k
        deg += [2] * k
        deg[u] += 1
        deg[v] += 1
        chain = [u] + new + [v]
        for a, c in zip(chain, chain[1:]):
            edges.add((min(a, c), max(a, c)))
        cycle[i + 1:i + 1] = new
    return sorted(edges), n


def random_outerplanar_subcubic(n: int, seed: int, two_connected: bool = False) -> Graph:
    """Random subcubic outerplanar graph on at most ``n`` vertices.

    With ``two_connected`` a single block is grown. Otherwise several pieces
    (blocks, single vertices) are joined into a forest of bridges; a piece is
    occasionally left disconnected.
    """
    if n < 3:
        raise InfeasibleRequest(f"need n >= 3, got {n}")
    rng = random.Random(seed)
    if two_connected:
        edges, m = _grow_block(rng, rng.randint(3, n))
        return from_edge_list(m, edges)
    all_edges: list[tuple[int, int]] = []
    deg: list[int] = []
    pieces: list[list[int]] = []
    total = 0
    budget = rng.randint(3, n)
    while total < budget:
        room = budget - total
        if room >= 3 and rng.random() < 0.6:
            edges, m = _grow_block(rng, rng.randint(3, min(room, 15)))
        else:
            edges, m = [], 1
        all_edges += [(u + total, v + total) for u, v in edges]
        d = [0] * m
        for u, v in edges:
            d[u] += 1
            d[v] += 1
        deg += d
        pieces.append(list(range(total, total + m)))
        total += m
    for i in range(1, len(pieces)):
        if rng.random() < 0.05:
            continue
        here = [v for v in pieces[i] if deg[v] < 3]
        there = [v for p in pieces[:i] for v in p if deg[v] < 3]
        if not here or not there:
            continue
        a, c = rng.choice(here), rng.choice(there)
        all_edges.append((a, c))
        deg[a] += 1
        deg[c] += 1
    g = from_edge_list(total, all_edges)
    assert is_subcubic(g)
    return g


def two_connected_outerplanar_subcubic(n: int):
    """Every 2-connected subcubic outerplanar graph on ``n`` labelled cycle positions.

    Such a graph is the cycle 0..n-1 plus a non-crossing matching of chords
    (subcubic: each vertex carries at most one chord). Yields each chord set
    once; isomorphic copies are not removed.
    """
    def matchings(lo: int, hi: int):
        # non-crossing partial matchings on positions lo..hi
        if lo > hi:
            yield []
            return
        yield from matchings(lo + 1, hi)
        for j in range(lo + 2, hi + 1):
            if lo == 0 and j == n - 1:
                continue
            for inner in matchings(lo + 1, j - 1):
                for outer in matchings(j + 1, hi):
                    yield [(lo, j)] + inner + outer

    cycle = [(i, (i + 1) % n) for i in range(n)]
    for chords in matchings(0, n - 1):
        yield from_edge_list(n, cycle + chords)
