"""Feasible (1,1,2,4)-colorings of subcubic outerplanar graphs.

A feasible coloring is a packing (1,1,2,4)-coloring in which class 4 occurs
at most once per block (A), and no vertex of degree at most 2 in class 3 has
a class-4 vertex within distance two (B).

The recursion colors components separately, peels vertices of degree at
most one, hands 2-connected graphs to the (1,1,2) colorer, shortens pendant
faces of length at least four, and otherwise detaches a pendant block
``G0`` hanging from the bridge ``u1 v1`` and extends a coloring of the rest
according to the shape of ``G0``:

* ``G0`` a triangle;
* the face ``F0`` through ``v1`` touches only pendant triangles;
* otherwise a deepest pendant triangle ``R`` of ``G0``, its face ``R0`` and
  the next face ``R0'`` towards ``F0`` drive the extension.

When ``u1`` has degree at most 2 and class 3, a class-4 vertex placed two
steps away would break (B); ``u1`` is then moved to a free 1-class first,
which is always possible because it has at most one other neighbour.
"""

from __future__ import annotations

from ..errors import InternalProofStepFailed, NotOuterplanar, NotSubcubic
from ..graph import Graph, connected_components, is_subcubic
from ..structure import analyze, is_outerplanar, pendant_faces
from ..verifier import Coloring, ColorSequence
from ._common import (A, B, FOUR, TWO, alternate, check_step, deep_recursion, free_one_class,
                      other, pull, reduce_graph, rotate)
from .two_connected import _cyc_nbrs, _pendant_long_face, color112

SEQ_1124 = ColorSequence((1, 1, 2, 4))


def color_1124(g: Graph, check: bool = True) -> Coloring:
    """A feasible packing (1,1,2,4)-coloring of a subcubic outerplanar graph.

    Connectivity is not required. With ``check`` set every extension step is
    re-verified, including conditions (A) and (B).
    """
    if not is_subcubic(g):
        raise NotSubcubic(f"maximum degree {g.max_degree()} exceeds 3")
    if not is_outerplanar(g):
        raise NotOuterplanar("graph is not outerplanar")
    with deep_recursion(g.n):
        colors = color1124(g, check)
    return Coloring(SEQ_1124, colors)


def color1124(g: Graph, check: bool) -> list[int]:
    if g.n == 0:
        return []
    comps = connected_components(g)
    if len(comps) > 1:
        col: list = [None] * g.n
        for comp in comps:
            sub, old_of_new = g.induced(comp)
            for i, c in enumerate(color1124(sub, check)):
                col[old_of_new[i]] = c
        return col
    return _connected(g, check)


def _peel(g: Graph) -> list[tuple[int, int | None]]:
    """Repeatedly strip vertices of degree <= 1; returns ``(vertex, neighbour)`` in removal order."""
    deg = [g.degree(v) for v in g.vertices()]
    alive = set(g.vertices())
    queue = sorted(v for v in alive if deg[v] <= 1)
    out = []
    while queue and len(alive) > 1:
        v = queue.pop(0)
        if v not in alive:
            continue
        alive.discard(v)
        nb = [w for w in g.neighbors(v) if w in alive]
        out.append((v, nb[0] if nb else None))
        for w in nb:
            deg[w] -= 1
            if deg[w] == 1:
                queue.append(w)
        queue.sort()
    return out


def _connected(g: Graph, check: bool) -> list[int]:
    if g.n == 1:
        return [A]
    peeled = _peel(g)
    if peeled:
        sub, old_of_new = reduce_graph(g, drop=[v for v, _ in peeled])
        col = pull(_connected(sub, check), old_of_new, g.n)
        for v, nb in reversed(peeled):
            col[v] = free_one_class(col[nb] if nb is not None else None)
        if check:
            check_step(g, col, [v for v, _ in peeled], "peel", True)
        return col
    st = analyze(g)
    if len(st.blocks.blocks) == 1:
        col = color112(g, check)
        if check:
            check_step(g, col, list(g.vertices()), "2-connected", True)
        return col

    wd, bt = st.dual, st.blocks
    for fi in pendant_faces(g, wd, bt):
        if len(wd.faces[fi]) < 4:
            continue
        if not any(v in bt.cut_vertices for v in wd.faces[fi].cycle):
            return _pendant_long_face(g, st, fi, check, color1124, feasible=True)
        return _pendant_cycle_block(g, wd.faces[fi].cycle, bt, check)
    return _pendant_block(g, st, check)


def _pendant_cycle_block(g: Graph, cycle, bt, check) -> list[int]:
    """A pendant block that is a single cycle of length >= 4 with cut vertex ``u1``."""
    (u1,) = [v for v in cycle if v in bt.cut_vertices]
    (v,) = [w for w in g.neighbors(u1) if w not in cycle]
    sub, old_of_new = reduce_graph(g, drop=cycle)
    col = pull(color1124(sub, check), old_of_new, g.n)
    seq = rotate(cycle, u1, min(_cyc_nbrs(cycle, u1)))
    col[u1] = free_one_class(col[v])
    if len(seq) % 2 == 0:
        for x, c in alternate(seq[1:], other(col[u1])).items():
            col[x] = c
        case = "pendant-cycle/even"
    else:
        col[seq[1]] = other(col[u1])
        col[seq[2]] = TWO
        for x, c in alternate(seq[3:], col[u1]).items():
            col[x] = c
        case = "pendant-cycle/odd"
    if check:
        check_step(g, col, seq, case, True)
    return col


# --- pendant blocks attached by a bridge ------------------------------------


def _pendant_block(g: Graph, st, check) -> list[int]:
    bt, wd = st.blocks, st.dual
    leaves = [i for i, b in enumerate(bt.blocks) if bt.block_cut_count(i) == 1]
    bi = min(leaves, key=lambda i: bt.blocks[i].vertices[0])
    block = bt.blocks[bi]
    if block.trivial:
        raise InternalProofStepFailed("pendant block is a bridge despite minimum degree 2", case="pendant-block")
    gv = set(block.vertices)
    (v1,) = [v for v in block.vertices if v in bt.cut_vertices]
    (u1,) = [w for w in g.neighbors(v1) if w not in gv]
    faces = wd.block_faces[bi]
    (f0,) = [f for f in faces if v1 in wd.faces[f].cycle]

    if len(faces) == 1:
        return _case1(g, block, v1, u1, check)
    nbrs = wd.neighbors(f0)
    if all(len(wd.neighbors(f)) == 1 for f in nbrs):
        return _case2(g, wd, f0, v1, u1, check)
    return _case3(g, wd, faces, f0, v1, u1, gv, check)


def _rest_coloring(g: Graph, drop, u1, check):
    """Color ``g - drop``; move a low-degree class-3 ``u1`` to a free 1-class."""
    sub, old_of_new = reduce_graph(g, drop=drop)
    col = pull(color1124(sub, check), old_of_new, g.n)
    touched = []
    if col[u1] == TWO and g.degree(u1) <= 2:
        col[u1] = free_one_class(*(col[w] for w in g.neighbors(u1)))
        touched.append(u1)
    return col, touched


def _u1_to_one_class(g, col, u1):
    """Recolor a class-4 ``u1`` with a 1-class unused by its neighbours, if any."""
    taken = {col[w] for w in g.neighbors(u1) if col[w] is not None}
    free = [c for c in (A, B) if c not in taken]
    if free:
        col[u1] = free[0]
        return True
    return False


def _case1(g, block, v1, u1, check) -> list[int]:
    if len(block.vertices) != 3:
        raise InternalProofStepFailed("pendant cycle block is not a triangle", case="case1")
    v2, v3 = [v for v in block.vertices if v != v1]
    col, touched = _rest_coloring(g, block.vertices, u1, check)
    fu = col[u1]
    if fu == FOUR and _u1_to_one_class(g, col, u1):
        touched.append(u1)
        fu = col[u1]
        case = "case1.3/recolor"
    else:
        case = {A: "case1.1", B: "case1.1", TWO: "case1.2", FOUR: "case1.3"}[fu]
    if fu in (A, B):
        col[v1], col[v2], col[v3] = other(fu), fu, TWO
    elif fu == TWO:
        col[v1], col[v2], col[v3] = A, B, FOUR
    else:
        col[v1], col[v2], col[v3] = TWO, B, A
    if check:
        check_step(g, col, touched + [v1, v2, v3], case, True)
    return col


def _apex(wd, f, edge_vertices) -> int:
    (y,) = [x for x in wd.faces[f].cycle if x not in edge_vertices]
    return y


def _attached_triangles(wd, face_index, seq, skip=()):
    """Pendant triangles on consecutive pairs ``seq[q], seq[q+1]`` as ``(q, apex)``, in order."""
    out = []
    k = len(seq)
    for q in range(k):
        a, b = seq[q], seq[(q + 1) % k]
        e = (a, b) if a < b else (b, a)
        for f in wd.edge_faces.get(e, ()):
            if f != face_index and f not in skip:
                if len(wd.faces[f]) != 3:
                    raise InternalProofStepFailed("pendant face is not a triangle", case="triangles")
                out.append((q, _apex(wd, f, (a, b))))
    return out


def _case2(g, wd, f0, v1, u1, check) -> list[int]:
    cyc = wd.faces[f0].cycle
    seq = rotate(cyc, v1, min(_cyc_nbrs(cyc, v1)))
    k = len(seq)
    tris = _attached_triangles(wd, f0, seq)
    drop = set(seq) | {y for _, y in tris}
    col, touched = _rest_coloring(g, sorted(drop), u1, check)
    fu = col[u1]
    new = list(drop)
    if k % 2 == 0:
        for x, c in alternate(seq, free_one_class(fu)).items():
            col[x] = c
        for _, y in tris:
            col[y] = TWO
        case = "case2/even"
    else:
        p, w1 = tris[0]
        if p == 0:
            raise InternalProofStepFailed("v1 lies on a chord", case="case2")
        col[seq[p]] = TWO if fu != TWO else FOUR
        path = seq[p + 1:] + seq[:p]  # starts at v_{p+1}, passes v1
        for first in (A, B):
            fill = alternate(path, first)
            if fill[v1] != fu:
                break
        for x, c in fill.items():
            col[x] = c
        col[w1] = free_one_class(col[seq[p + 1]])
        for _, y in tris[1:]:
            col[y] = TWO
        case = "case2.1" if fu != TWO else "case2.2"
    if check:
        check_step(g, col, touched + new, case, True)
    return col


def _case3(g, wd, faces, f0, v1, u1, gv, check) -> list[int]:
    # breadth-first distances from F0 inside the block's face tree
    dist = {f0: 0}
    parent = {f0: None}
    order = [f0]
    for f in order:
        for h in wd.neighbors(f):
            if h not in dist:
                dist[h] = dist[f] + 1
                parent[h] = f
                order.append(h)
    leaves = [f for f in faces if f != f0 and len(wd.neighbors(f)) == 1]
    r = min(leaves, key=lambda f: (-dist[f], f))
    if dist[r] < 2:
        raise InternalProofStepFailed("deepest pendant face is next to F0", case="case3")
    r0 = parent[r]
    r0p = parent[r0]
    shared = set(wd.faces[r0].cycle) & set(wd.faces[r0p].cycle)
    x1, x2 = sorted(shared)
    c0 = wd.faces[r0].cycle

    def orient(x1, x2):
        seq = rotate(c0, x1, x2)
        tris = _attached_triangles(wd, r0, seq, skip=(r0p,))
        return seq, tris

    if len(wd.faces[r0p]) == 3:
        (x0,) = [x for x in wd.faces[r0p].cycle if x not in shared]
        if x0 != v1:
            raise InternalProofStepFailed("triangle R0' does not carry v1", case="case3.1")
        seq, tris = orient(x1, x2)
        return _case31(g, seq, tris, x0, u1, gv, check)
    return _case32(g, wd, r0p, orient, x1, x2, check)


def _case31(g, seq, tris, x0, u1, gv, check) -> list[int]:
    col, touched = _rest_coloring(g, sorted(gv), u1, check)
    fu = col[u1]
    x1 = seq[0]
    ys = [y for _, y in tris]
    qm = tris[-1][0]
    if fu == FOUR and _u1_to_one_class(g, col, u1):
        touched.append(u1)
        fu = col[u1]
    if fu in (A, B):
        case = "case3.1.1"
        col[x1] = TWO
        for x, c in alternate([x0] + seq[1:], other(fu)).items():
            col[x] = c
        col[ys[-1]] = FOUR
        for y in ys[:-1]:
            col[y] = TWO
    elif fu == TWO:
        case = "case3.1.2"
        col[x1] = FOUR
        col[seq[qm + 1]] = TWO
        for x, c in alternate([x0] + seq[1:qm + 1] + [ys[-1]], A).items():
            col[x] = c
        for x, c in alternate(seq[qm + 2:], A).items():
            col[x] = c
        for y in ys[:-1]:
            col[y] = TWO
    else:
        case = "case3.1.3"
        sub, old_of_new = g.induced(sorted(gv))
        for i, c in enumerate(color112(sub, check)):
            col[old_of_new[i]] = c
    if check:
        check_step(g, col, touched + sorted(gv), case, True)
    return col


def _case32(g, wd, r0p, orient, x1, x2, check) -> list[int]:
    cp = wd.faces[r0p].cycle

    def outer_nbr(x, partner):
        (y,) = [w for w in _cyc_nbrs(cp, x) if w != partner]
        return y

    seq, tris = orient(x1, x2)
    removed = sorted(set(seq) | {y for _, y in tris})
    x1p, x2p = outer_nbr(x1, x2), outer_nbr(x2, x1)
    sub, old_of_new = reduce_graph(g, drop=removed, add=[(x1p, x2p)])
    col = pull(color1124(sub, check), old_of_new, g.n)
    case = "case3.2"
    if col[x2p] == TWO:
        x1, x2, x1p, x2p = x2, x1, x2p, x1p
        seq, tris = orient(x1, x2)
        case = "case3.2/mirrored"
    q1, y1 = tris[0]
    col[seq[q1]] = TWO
    path = seq[q1 + 1:] + seq[:q1]
    for first in (A, B):
        fill = alternate(path, first)
        if fill[x1] != col[x1p] and fill[x2] != col[x2p]:
            break
    else:
        raise InternalProofStepFailed("no alternation fits x1', x2'", case=case)
    for x, c in fill.items():
        col[x] = c
    col[y1] = free_one_class(col[seq[q1 + 1]])
    for _, y in tris[1:]:
        col[y] = TWO
    if check:
        check_step(g, col, removed, case, True)
    return col
