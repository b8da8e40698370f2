"""Immutable simple graphs on vertices ``0..n-1`` plus distance utilities."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphInputError, OutOfRangeVertex, SelfLoop

#: Distance between vertices in different components.
INF = math.inf


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense integer vertex ids.

    Build instances with :func:`from_edge_list`; the constructor trusts its
    arguments.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self.adjacency[u], self.adjacency[v]
        return v in a if len(a) <= len(b) else u in b

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        return from_edge_list(self.vertex_count, list(self.edges) + list(extra))

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``keep``.

        Returns the relabelled subgraph together with ``old_of_new``, the
        original id of every new vertex (new ids follow ascending old ids).
        """
        old_of_new = sorted(set(keep))
        new_of_old = {v: i for i, v in enumerate(old_of_new)}
        pairs = [
            (new_of_old[u], new_of_old[v])
            for u, v in self.edges
            if u in new_of_old and v in new_of_old
        ]
        return from_edge_list(len(old_of_new), pairs), old_of_new

    def without(self, drop: Iterable[int]) -> tuple[Graph, list[int]]:
        drop = set(drop)
        return self.induced(v for v in self.vertices() if v not in drop)


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphInputError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise OutOfRangeVertex(f"vertex {x} outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in adj))


def bfs_distances(g: Graph, source: int, radius: float = INF) -> dict[int, int]:
    """Hop distances from ``source`` to every vertex within ``radius``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du >= radius:
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold :data:`INF`."""

    def __init__(self, rows: list[list[float]]):
        self._rows = rows

    def __getitem__(self, uv: tuple[int, int]) -> float:
        u, v = uv
        return self._rows[u][v]

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, u: int) -> list[float]:
        return self._rows[u]

    def as_lists(self) -> list[list[float]]:
        return [list(r) for r in self._rows]

    def at_distance(self, u: int, d: int) -> list[int]:
        """Vertices at distance exactly ``d`` from ``u``."""
        return [v for v, x in enumerate(self._rows[u]) if x == d]

    def eccentricity(self, u: int) -> float:
        return max(self._rows[u], default=0)

    def diameter(self) -> float:
        return max((self.eccentricity(u) for u in range(len(self._rows))), default=0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for s in g.vertices():
        row: list[float] = [INF] * g.n
        for v, d in bfs_distances(g, s).items():
            row[v] = d
        rows.append(row)
    return DistanceMatrix(rows)


def is_subcubic(g: Graph) -> bool:
    return g.max_degree() <= 3


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class SubdivisionMap:
    graph: Graph
    vertex_map: tuple[int, ...]
    midpoint: dict[tuple[int, int], int]

    def is_midpoint(self, v: int) -> bool:
        return v >= len(self.vertex_map)


def subdivide(g: Graph) -> SubdivisionMap:
    """Replace every edge by a path of length two.

    Original vertices keep their ids; the midpoint of the ``j``-th edge (in
    ``g.edges`` order) gets id ``n + j``.
    """
    pairs = []
    midpoint = {}
    for j, (u, v) in enumerate(g.edges):
        w = g.n + j
        midpoint[(u, v)] = w
        pairs += [(u, w), (w, v)]
    sub = from_edge_list(g.n + g.m, pairs)
    return SubdivisionMap(sub, tuple(range(g.n)), midpoint)


# --- text format ----------------------------------------------------------


def parse_graph_text(text: str) -> tuple[Graph, dict[str, int]]:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Lines starting with ``#`` are comments. Comments of the form
    ``# label <name> <id>`` are collected into the returned label table.
    """
    labels: dict[str, int] = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "label":
                try:
                    labels[parts[1]] = int(parts[2])
                except ValueError as exc:
                    raise GraphInputError(f"line {lineno}: bad label id") from exc
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphInputError(f"line {lineno}: expected integers, got {raw!r}") from exc
    if not rows:
        raise GraphInputError("missing header line 'n m'")
    (n, m), pairs = rows[0], rows[1:]
    if len(pairs) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs), labels


def format_graph_text(g: Graph, labels: dict[str, int] | None = None, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    if labels:
        lines += [f"# label {name} {v}" for name, v in labels.items()]
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
