"""Packing (1,1,2)-colorings of 2-connected subcubic outerplanar graphs.

The recursion removes structure until a base case is reached, then extends
the coloring back:

* at most three vertices: all classes distinct;
* a single face: alternate the two 1-classes, closing an odd cycle with 2;
* a pendant face of length at least four: drop its inner path, recurse,
  and refill the path (with one class-2 vertex in the odd, blocked case);
* an even face: alternate its boundary and recurse on every component
  hanging off it, with its two attachment neighbours joined by an edge so
  that they receive different classes;
* otherwise a pendant triangle at the end of a longest path of the weak
  dual, whose neighbouring odd face has a degree-2 vertex to work from.
"""

from __future__ import annotations

from itertools import permutations

from ..errors import EdgeAdditionBreaksClass, InternalProofStepFailed, NotOuterplanar, NotSubcubic, NotTwoConnected
from ..graph import Graph, is_subcubic
from ..structure import analyze, is_outerplanar, is_two_connected
from ..verifier import Coloring, ColorSequence
from ._common import (A, B, TWO, alternate, check_step, deep_recursion, other, pull,
                      reduce_graph, rotate)

SEQ_112 = ColorSequence((1, 1, 2))


def _require_class(g: Graph) -> None:
    if not is_subcubic(g):
        raise NotSubcubic(f"maximum degree {g.max_degree()} exceeds 3")
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    if not is_outerplanar(g):
        raise NotOuterplanar("graph is not outerplanar")


def color_112_2connected(g: Graph, check: bool = True) -> Coloring:
    """A packing (1,1,2)-coloring of a 2-connected subcubic outerplanar graph.

    Classes 1 and 2 are the two classes with threshold 1, class 3 has
    threshold 2. With ``check`` set every extension step is re-verified.
    """
    _require_class(g)
    with deep_recursion(g.n):
        colors = color112(g, check)
    return Coloring(SEQ_112, colors)


def color_112_with_distinct_pair(g: Graph, u: int, v: int, check: bool = True,
                                 fallback: bool = True) -> Coloring:
    """As :func:`color_112_2connected`, with ``u`` and ``v`` in different classes.

    The edge ``uv`` is added and the result colored, so the edge forces the
    two classes apart. When ``g + uv`` is no longer subcubic or outerplanar
    this route is closed: without ``fallback`` that raises
    :class:`EdgeAdditionBreaksClass`. With ``fallback`` the plain coloring of
    ``g`` is kept if it already separates ``u`` and ``v``, and otherwise the
    exact outerplanar solver searches for a separating coloring; the error is
    raised only when none exists.
    """
    if u == v:
        raise ValueError("u and v must differ")
    _require_class(g)
    h = g if g.has_edge(u, v) else g.with_edges([(u, v)])
    problem = None
    if not is_subcubic(h):
        problem = f"adding {u}-{v} exceeds degree 3"
    elif not is_outerplanar(h):
        problem = f"adding {u}-{v} breaks outerplanarity"
    if problem is None:
        with deep_recursion(h.n):
            colors = color112(h, check)
        return Coloring(SEQ_112, colors)
    if not fallback:
        raise EdgeAdditionBreaksClass(problem)
    c = color_112_2connected(g, check)
    if c[u] != c[v]:
        return c
    from ..solver import Pin, decide_dp_outerplanar

    for cu, cv in permutations((A, B, TWO), 2):
        res = decide_dp_outerplanar(g, SEQ_112, [Pin(u, cu), Pin(v, cv)])
        if res.sat:
            return res.coloring
    raise EdgeAdditionBreaksClass(f"{problem}, and no (1,1,2)-coloring separates {u} and {v}")


# --- recursion ------------------------------------------------------------


def _debug_class(g: Graph, case: str) -> None:
    if not (is_subcubic(g) and (g.n <= 3 or is_two_connected(g)) and is_outerplanar(g)):
        raise InternalProofStepFailed("reduced instance left the graph class", case=case)


def color112(g: Graph, check: bool) -> list[int]:
    """Core recursion; ``g`` is trusted to be in the class (or have <= 3 vertices)."""
    if g.n <= 3:
        return [A, B, TWO][: g.n]
    st = analyze(g)
    wd = st.dual
    if len(wd.faces) == 1:
        cycle = list(wd.faces[0].cycle)
        col = [0] * g.n
        for v, c in alternate(cycle, A).items():
            col[v] = c
        if len(cycle) % 2:
            col[cycle[-1]] = TWO
        return col
    for fi, face in enumerate(wd.faces):
        if len(face) >= 4 and len(wd.neighbors(fi)) <= 1:
            return _pendant_long_face(g, st, fi, check, color112, feasible=False)
    for fi, face in enumerate(wd.faces):
        if len(face) % 2 == 0:
            return _even_face(g, wd.faces[fi].cycle, check)
    return _endgame(g, st, check)


def pendant_path(st, fi: int) -> list[int]:
    """Boundary of a dual-leaf face as ``u1, u2, ..., uk`` where ``u1 uk`` is its chord."""
    face = st.dual.faces[fi]
    chords = [e for e in face.edges() if len(st.dual.edge_faces[e]) == 2]
    if len(chords) != 1:
        raise InternalProofStepFailed("pendant face without a unique chord", case="pendant-face")
    a, b = chords[0]
    toward = next(x for x in _cyc_nbrs(face.cycle, a) if x != b)
    seq = rotate(face.cycle, a, toward)
    if seq[-1] != b:
        raise InternalProofStepFailed("chord endpoints not adjacent on face", case="pendant-face")
    return seq


def _cyc_nbrs(cycle, v):
    i = cycle.index(v)
    return {cycle[i - 1], cycle[(i + 1) % len(cycle)]}


def fill_path(path: list[int], left: int | None, right: int | None) -> tuple[dict[int, int], bool]:
    """Color an inner path whose outer neighbours have classes ``left``/``right``.

    Alternates the 1-classes when possible. Otherwise (odd length, ends
    ``{1a, 1b}``) colors ``right, 2`` and then alternates from ``left``.
    The flag reports the exceptional case.
    """
    for first in (A, B):
        cand = alternate(path, first)
        if cand[path[0]] != left and cand[path[-1]] != right:
            return cand, False
    if len(path) < 2 or {left, right} != {A, B}:
        raise InternalProofStepFailed("path cannot be refilled", case="pendant-face")
    out = {path[0]: right, path[1]: TWO}
    out.update(alternate(path[2:], left))
    return out, True


def _pendant_long_face(g, st, fi, check, recurse, feasible):
    """Drop the inner path of a dual-leaf face of length >= 4, recurse, refill."""
    seq = pendant_path(st, fi)
    inner = seq[1:-1]
    sub, old_of_new = reduce_graph(g, drop=inner)
    case = "pendant-face"
    if check and not feasible:
        _debug_class(sub, case)
    col = pull(recurse(sub, check), old_of_new, g.n)
    fill, exceptional = fill_path(inner, col[seq[0]], col[seq[-1]])
    for v, c in fill.items():
        col[v] = c
    if check:
        check_step(g, col, inner, case + ("/odd-blocked" if exceptional else ""), feasible)
    return col


def hanging_pieces(g: Graph, cycle) -> list[tuple[list[int], int, int, int]]:
    """Components of ``g - cycle`` as ``(vertices, j, v, v')``.

    Each attaches to ``cycle[j]`` via ``v`` and to ``cycle[j+1]`` via ``v'``.
    """
    k = len(cycle)
    on = set(cycle)
    seen: set[int] = set()
    out = []
    for s in sorted(set(g.vertices()) - on):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.neighbors(x):
                if y not in on and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comp.sort()
        cs = set(comp)
        attach = {u for u in cycle if any(w in cs for w in g.neighbors(u))}
        for j in range(k):
            if attach == {cycle[j], cycle[(j + 1) % k]}:
                break
        else:
            raise InternalProofStepFailed("component does not hang off one face edge", case="pieces")
        u, u2 = cycle[j], cycle[(j + 1) % k]
        (v,) = [w for w in g.neighbors(u) if w in cs]
        (vp,) = [w for w in g.neighbors(u2) if w in cs]
        out.append((comp, j, v, vp))
    return out


def color_piece(g: Graph, comp, v, vp, avoid_v, avoid_vp, check, recurse, case) -> dict[int, int]:
    """Color ``comp + v v'`` recursively, renaming 1-classes so ``v``, ``v'`` avoid the given classes."""
    sub, old_of_new = g.induced(comp)
    new_of_old = {x: i for i, x in enumerate(old_of_new)}
    if v != vp and not sub.has_edge(new_of_old[v], new_of_old[vp]):
        sub = sub.with_edges([(new_of_old[v], new_of_old[vp])])
    if check and recurse is color112:
        _debug_class(sub, case)
    sc = recurse(sub, check)
    for swap in (False, True):
        got = {old_of_new[i]: (other(c) if swap and c in (A, B) else c) for i, c in enumerate(sc)}
        if got[v] != avoid_v and got[vp] != avoid_vp:
            return got
    raise InternalProofStepFailed("no renaming separates the attachment classes", case=case)


def _even_face(g: Graph, cycle, check) -> list[int]:
    col: list = [None] * g.n
    for v, c in alternate(cycle, A).items():
        col[v] = c
    k = len(cycle)
    case = "even-face"
    for comp, j, v, vp in hanging_pieces(g, cycle):
        if len(comp) == 1:
            col[comp[0]] = TWO
            continue
        got = color_piece(g, comp, v, vp, col[cycle[j]], col[cycle[(j + 1) % k]], check, color112, case)
        for x, c in got.items():
            col[x] = c
    if check:
        check_step(g, col, list(g.vertices()), case, False)
    return col


def _longest_dual_path_end(wd) -> int:
    """First face of the lexicographically smallest longest path in the weak dual."""
    nf = len(wd.faces)
    adj = [wd.neighbors(f) for f in range(nf)]
    best: list[int] = []
    for s in range(nf):
        # tree: unique paths by DFS from s
        parent = {s: None}
        order = [s]
        for x in order:
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        for t in order:
            path = [t]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()
            if len(path) > len(best) or (len(path) == len(best) and path < best):
                best = path
    return best[0]


def _endgame(g: Graph, st, check) -> list[int]:
    wd = st.dual
    f0 = _longest_dual_path_end(wd)
    if len(wd.faces[f0]) != 3:
        raise InternalProofStepFailed("end of a longest dual path is not a triangle", case="endgame")
    (f1,) = wd.neighbors(f0)
    cyc = list(wd.faces[f1].cycle)
    if len(cyc) == 3:
        if g.n != 4:
            raise InternalProofStepFailed("two adjacent triangles but not K4-e", case="K4-e")
        col = [0] * 4
        low = [v for v in g.vertices() if g.degree(v) == 2]
        high = [v for v in g.vertices() if g.degree(v) == 3]
        for v in low:
            col[v] = A
        col[high[0]], col[high[1]] = B, TWO
        if check:
            check_step(g, col, list(g.vertices()), "K4-e", False)
        return col
    w1 = min(v for v in cyc if g.degree(v) == 2)
    a, b = sorted(_cyc_nbrs(cyc, w1))
    deg2 = [x for x in (a, b) if g.degree(x) == 2]
    if deg2:
        w = rotate(cyc, w1, deg2[0])
        case = "odd-face/two-degree-2"
        sub, old_of_new = reduce_graph(g, drop=[w[0], w[1]], add=[(w[2], w[-1])])
        if check:
            _debug_class(sub, case)
        col = pull(color112(sub, check), old_of_new, g.n)
        for c1, c2 in permutations((A, B)):
            if c2 != col[w[2]] and c1 != col[w[-1]]:
                col[w[0]], col[w[1]] = c1, c2
                break
        else:
            raise InternalProofStepFailed("no 1-classes fit w1, w2", case=case)
        if check:
            check_step(g, col, [w[0], w[1]], case, False)
        return col

    case = "odd-face/degree-3-neighbours"
    for toward in (a, b):
        w = rotate(cyc, w1, toward)
        pieces = hanging_pieces(g, w)
        first = [p for p in pieces if p[1] == 1]
        if first and len(first[0][0]) == 1:
            break
    else:
        raise InternalProofStepFailed("neither side of w1 carries a single vertex", case=case)
    col: list = [None] * g.n
    col[w[1]] = TWO
    for v, c in alternate(w[2:] + [w[0]], A).items():
        col[v] = c
    large = 0
    k = len(w)
    for comp, j, v, vp in pieces:
        if j == 1:
            col[comp[0]] = B
        elif len(comp) == 1:
            col[comp[0]] = TWO
        else:
            large += 1
            got = color_piece(g, comp, v, vp, col[w[j]], col[w[(j + 1) % k]], check, color112, case)
            for x, c in got.items():
                col[x] = c
    if large > 1:
        raise InternalProofStepFailed("more than one large component", case=case)
    if check:
        check_step(g, col, list(g.vertices()), case, False)
    return col
