"""Exact packing S-coloring for outerplanar graphs by separator dynamic programming.

The graph is processed along its block-cut forest and, inside each
2-connected block, along the face tree of the outerplane embedding. Every
part hangs off the rest through a cut vertex or a chord ``ab``; shortest
paths between the two sides pass through that separator, and any detour
between ``a`` and ``b`` through the other side is no shorter than the chord.
So a part is summarized by the classes of its separator vertices and, per
class ``i``, the distance from each separator vertex to the nearest class-``i``
vertex inside the part, capped at ``s_i + 1``.

Summaries of a chord part ``G(a, b)`` are built by walking the boundary of
the face on the far side of ``ab`` from ``a`` to ``b``: ``w_0 = a, ..., w_m = b``.
The walk state holds, per class, the distance from the current vertex
``w_j`` and from ``a`` to the processed vertices, measured without the chord
``ab``. A path from a processed vertex to a later one goes either through
``w_j`` or around through the chord, so both distances suffice to check every
new pair. Larger distances are never worse, so each table only keeps its
Pareto-maximal profiles.
"""

from __future__ import annotations

import sys
import time
from collections import defaultdict

from ..errors import MemoryBudgetExceeded
from ..graph import Graph, connected_components
from ..structure import analyze
from ..verifier import Coloring, as_sequence, verify_packing
from .common import Pin, SolveResult, normalize_pins

DEFAULT_MAX_STATES = 5_000_000


def _pareto_add(bucket: list, vec: tuple, wit) -> bool:
    for other, _ in bucket:
        if all(a >= b for a, b in zip(other, vec)):
            return False
    bucket[:] = [(o, w) for o, w in bucket if not all(a >= b for a, b in zip(vec, o))]
    bucket.append((vec, wit))
    return True


class _Table(dict):
    """key -> Pareto list of (profile, witness)."""

    def add(self, key, vec, wit, counter):
        bucket = self.get(key)
        if bucket is None:
            bucket = self[key] = []
        if _pareto_add(bucket, vec, wit):
            counter.bump()


class _OutOfTime(Exception):
    pass


class _Counter:
    def __init__(self, limit, deadline):
        self.limit = limit
        self.deadline = deadline
        self.count = 0

    def bump(self):
        self.count += 1
        if self.limit is not None and self.count > self.limit:
            raise MemoryBudgetExceeded(f"DP created more than {self.limit} states")
        if self.deadline is not None and self.count & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise _OutOfTime


class _OuterplanarDP:
    def __init__(self, g: Graph, s, pinned, max_states, deadline=None):
        self.g = g
        self.s = s
        self.k = s.k
        self.sv = list(s.values)
        self.cap = tuple(x + 1 for x in self.sv)
        self.allowed = [sorted(pinned.get(v, range(1, s.k + 1))) for v in g.vertices()]
        self.counter = _Counter(max_states, deadline)
        st = analyze(g)
        self.st = st
        self.blocks = st.blocks.blocks
        self.vertex_blocks = defaultdict(list)
        for bi, b in enumerate(self.blocks):
            for v in b.vertices:
                self.vertex_blocks[v].append(bi)
        self.faces = st.dual.faces
        self.edge_faces = st.dual.edge_faces

    # -- hanging subtrees at a vertex ----------------------------------

    def hanging(self, v, parent_block):
        """cv -> Pareto list of (H, witness); H measured from v, v excluded."""
        tables = [
            self.block_from(b, v) for b in self.vertex_blocks[v]
            if b != parent_block and len(self.blocks[b].vertices) > 1
        ]
        out = _Table()
        for cv in self.allowed[v]:
            cur = [(self.cap, None)]
            for table in tables:
                options = table.get(cv, [])
                nxt: list = []
                for h, w1 in cur:
                    for d, w2 in options:
                        if any(x + y <= si for x, y, si in zip(h, d, self.sv)):
                            continue
                        _pareto_add(nxt, tuple(map(min, h, d)), (w1, w2))
                cur = nxt
                if not cur:
                    break
            for h, w in cur:
                out.add(cv, h, w, self.counter)
        return out

    # -- a block seen from its parent vertex p -----------------------

    def block_from(self, bi, p):
        """cp -> Pareto list of (D, witness): distances from p into block bi and below."""
        block = self.blocks[bi]
        sv, cap = self.sv, self.cap
        out = _Table()
        if len(block.vertices) == 2:
            q = block.vertices[0] if block.vertices[1] == p else block.vertices[1]
            hq = self.hanging(q, bi)
            for cp in self.allowed[p]:
                for cq, opts in hq.items():
                    if cq == cp:
                        continue
                    for h, wh in opts:
                        if 1 + h[cp - 1] <= sv[cp - 1]:
                            continue
                        d = tuple(min(1 if i + 1 == cq else c, 1 + h[i], c) for i, c in enumerate(cap))
                        out.add(cp, d, (("v", q, cq), wh), self.counter)
            return out
        cycle = self.st.embedding.blocks[bi].cycle
        i = cycle.index(p)
        q = cycle[(i + 1) % len(cycle)]
        (face,) = self.edge_faces[tuple(sorted((p, q)))]
        inner = self.chord_part(p, q, face)
        hq = self.hanging(q, bi)
        for (cp, cq), opts in inner.items():
            for hv, wh in hq.get(cq, []):
                if 1 + hv[cp - 1] <= sv[cp - 1]:
                    continue
                for vec, wi in opts:
                    ia, ib = vec[:self.k], vec[self.k:]
                    if any(x + y <= si for x, y, si in zip(hv, ib, sv)):
                        continue
                    d = tuple(
                        min(ia[j], 1 if j + 1 == cq else cap[j], 1 + hv[j], cap[j])
                        for j in range(self.k)
                    )
                    out.add(cp, d, (wi, ("v", q, cq), wh), self.counter)
        return out

    # -- the part beyond chord ab, on the side of face f --------------

    def chord_part(self, a, b, f):
        """(ca, cb) -> Pareto list of (Ia + Ib, witness), interior vertices only."""
        k, sv, cap = self.k, self.sv, self.cap
        cyc = self.faces[f].cycle
        L = len(cyc)
        ia = cyc.index(a)
        if cyc[(ia + 1) % L] == b:
            path = [cyc[(ia - t) % L] for t in range(L)]
        else:
            path = [cyc[(ia + t) % L] for t in range(L)]
        assert path[-1] == b
        m = L - 1

        states = _Table()
        for ca in self.allowed[a]:
            states.add((ca, ca), cap + cap, None, self.counter)

        for j in range(m):
            wj, w = path[j], path[j + 1]
            last = j + 1 == m
            e = tuple(sorted((wj, w)))
            other = [x for x in self.edge_faces[e] if x != f]
            if other:
                pocket = self.chord_part(wj, w, other[0])
            else:
                pocket = None
            if last:
                hang = {cn: [(cap, None)] for cn in self.allowed[w]}
            else:
                hang = self.hanging(w, self.faces[f].block)
            rest = m - j - 1
            nxt = _Table()
            for (ca, cj), bucket in states.items():
                for cn, hopts in hang.items():
                    if cn == cj:
                        continue
                    if pocket is None:
                        popts = [(cap + cap, None)]
                    else:
                        popts = pocket.get((cj, cn))
                        if not popts:
                            continue
                    for vec, wit in bucket:
                        F, B = vec[:k], vec[k:]
                        ffull = [
                            min(F[i], 0 if cj == i + 1 else cap[i], j if ca == i + 1 else cap[i])
                            for i in range(k)
                        ]
                        bfull = [
                            min(B[i], 0 if ca == i + 1 else cap[i], j if cj == i + 1 else cap[i])
                            for i in range(k)
                        ]
                        x = cn - 1
                        if min(ffull[x] + 1, bfull[x] + 1 + rest) <= sv[x]:
                            continue
                        for pvec, pw in popts:
                            pa, pb = pvec[:k], pvec[k:]
                            if any(
                                min(ffull[i] + pa[i], bfull[i] + 1 + pb[i] + rest) <= sv[i]
                                for i in range(k)
                            ):
                                continue
                            for h, hw in hopts:
                                bad = False
                                for i in range(k):
                                    hi = h[i]
                                    if hi >= cap[i]:
                                        continue
                                    if (min(ffull[i] + 1, bfull[i] + 1 + rest) + hi <= sv[i]
                                            or pb[i] + hi <= sv[i]):
                                        bad = True
                                        break
                                if bad:
                                    continue
                                nf = tuple(
                                    min(pb[i], F[i] + 1, 1 if (cj == i + 1 and j > 0) else cap[i], h[i], cap[i])
                                    for i in range(k)
                                )
                                if last:
                                    nb = tuple(min(B[i], j + pa[i], cap[i]) for i in range(k))
                                    nw = (wit, pw)
                                else:
                                    nb = tuple(
                                        min(B[i], j + pa[i], j + 1 if cn == i + 1 else cap[i],
                                            j + 1 + h[i], cap[i])
                                        for i in range(k)
                                    )
                                    nw = (wit, pw, ("v", w, cn), hw)
                                nxt.add((ca, cn), nf + nb, nw, self.counter)
            states = nxt
            if not states:
                break

        out = _Table()
        for (ca, cb), bucket in states.items():
            for vec, wit in bucket:
                F, B = vec[:k], vec[k:]
                ia_out = tuple(min(B[i], 1 + F[i]) for i in range(k))
                ib_out = tuple(min(F[i], 1 + B[i]) for i in range(k))
                out.add((ca, cb), ia_out + ib_out, wit, self.counter)
        return out

    # -- driver ----------------------------------------------------------

    def solve_component(self, r):
        h = self.hanging(r, None)
        for cr, opts in sorted(h.items()):
            if opts:
                return (("v", r, cr), opts[0][1])
        return None


def _unpack(wit, colors):
    stack = [wit]
    while stack:
        w = stack.pop()
        if w is None:
            continue
        if w[0] == "v":
            colors[w[1]] = w[2]
        else:
            stack.extend(w)


def decide_dp_outerplanar(g: Graph, s, pins: list[Pin] | None = None,
                          max_states: int | None = DEFAULT_MAX_STATES,
                          budget: float | None = None) -> SolveResult:
    """Decide packing S-colorability of an outerplanar graph exactly.

    Raises :class:`NotOuterplanar` for other inputs and
    :class:`MemoryBudgetExceeded` when more than ``max_states`` profile
    states are created. ``budget`` is a wall-clock limit in seconds; on
    expiry the result has status ``TIMEOUT``.
    """
    s = as_sequence(s)
    pinned = normalize_pins(pins or [], g.n, s.k)
    deadline = None if budget is None else time.monotonic() + budget
    dp = _OuterplanarDP(g, s, pinned, max_states, deadline)
    colors: list[int | None] = [None] * g.n
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20 * g.n + 1000))
    try:
        for comp in connected_components(g):
            wit = dp.solve_component(comp[0])
            if wit is None:
                return SolveResult("UNSAT", None, stats={"states": dp.counter.count})
            _unpack(wit, colors)
    except _OutOfTime:
        return SolveResult("TIMEOUT", None, stats={"states": dp.counter.count, "budget": budget})
    finally:
        sys.setrecursionlimit(old)
    coloring = Coloring(s, colors)
    bad = verify_packing(g, s, coloring)
    if bad or any(coloring[v] not in a for v, a in pinned.items()):
        raise AssertionError(f"DP produced an invalid witness: {bad[:1]}")
    return SolveResult("SAT", coloring, stats={"states": dp.counter.count})
