"""Block decomposition, outerplane embeddings and weak duals."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import NotOuterplanar
from .graph import Graph


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def trivial(self) -> bool:
        """Single edge (or isolated vertex)."""
        return len(self.vertices) <= 2


@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    #: (block index, cut vertex) incidences of the block-cut forest
    incidences: tuple[tuple[int, int], ...]

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def nontrivial(self) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if not b.trivial]

    def block_cut_count(self, i: int) -> int:
        return sum(1 for v in self.blocks[i].vertices if v in self.cut_vertices)


def block_cut_tree(g: Graph) -> BlockTree:
    """Biconnected components via an iterative Hopcroft-Tarjan search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks: list[Block] = []
    cuts: set[int] = set()
    for root in g.vertices():
        if disc[root] != -1:
            continue
        if not g.adjacency[root]:
            disc[root] = timer
            timer += 1
            blocks.append(Block((root,), ()))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(g.adjacency[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp_edges = []
                while True:
                    e = edge_stack.pop()
                    comp_edges.append(e)
                    if e == (parent, u):
                        break
                verts = sorted({x for e in comp_edges for x in e})
                es = sorted((a, b) if a < b else (b, a) for a, b in comp_edges)
                blocks.append(Block(tuple(verts), tuple(es)))
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=lambda b: (b.vertices, b.edges))
    incidences = tuple(
        (i, v) for i, b in enumerate(blocks) for v in b.vertices if v in cuts
    )
    return BlockTree(tuple(blocks), frozenset(cuts), incidences)


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        return False
    bt = block_cut_tree(g)
    return len(bt.blocks) == 1 and not bt.blocks[0].trivial


# --- outer cycles ----------------------------------------------------------


@dataclass(frozen=True)
class BlockEmbedding:
    block: int
    cycle: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class OuterEmbedding:
    graph: Graph
    block_tree: BlockTree
    #: block index -> embedding, nontrivial blocks only
    blocks: dict[int, BlockEmbedding]


def _outer_cycle(block: Block) -> tuple[int, ...]:
    """Hamiltonian (outer) cycle of a 2-connected block, by degree-2 reduction.

    Repeatedly removes a degree-2 vertex v with neighbours x, y, adding xy if
    absent; the removals are then replayed, inserting v between x and y, which
    must be consecutive on the cycle built so far. Any failure means the
    block is not outerplanar.
    """
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in block.edges:
        adj[u].add(v)
        adj[v].add(u)
    if len(block.edges) > 2 * len(block.vertices) - 3:
        raise NotOuterplanar("too many edges for an outerplanar block", block.vertices)
    deg2 = {v for v in adj if len(adj[v]) == 2}
    removed: list[tuple[int, int, int]] = []
    alive = len(adj)
    while alive > 3:
        if not deg2:
            raise NotOuterplanar("block has minimum degree 3 after reduction", block.vertices)
        v = min(deg2)
        deg2.discard(v)
        x, y = sorted(adj[v])
        del adj[v]
        adj[x].discard(v)
        adj[y].discard(v)
        adj[x].add(y)
        adj[y].add(x)
        alive -= 1
        removed.append((v, x, y))
        for z in (x, y):
            if len(adj[z]) == 2:
                deg2.add(z)
            else:
                deg2.discard(z)
    cycle = sorted(adj)
    if any(len(adj[v]) != 2 for v in cycle):
        raise NotOuterplanar("reduction did not end in a triangle", block.vertices)
    nxt = {cycle[0]: cycle[1], cycle[1]: cycle[2], cycle[2]: cycle[0]}
    for v, x, y in reversed(removed):
        if nxt.get(x) == y:
            nxt[x], nxt[v] = v, y
        elif nxt.get(y) == x:
            nxt[y], nxt[v] = v, x
        else:
            raise NotOuterplanar("reduction replay failed", block.vertices)
    start = min(nxt)
    order = [start]
    while nxt[order[-1]] != start:
        order.append(nxt[order[-1]])
    return tuple(order)


def _canonical_cycle(cycle: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to the smallest vertex and head toward its smaller cycle neighbour."""
    i = cycle.index(min(cycle))
    rot = list(cycle[i:]) + list(cycle[:i])
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def _embed_block(index: int, block: Block) -> BlockEmbedding:
    cycle = _outer_cycle(block)
    pos = {v: i for i, v in enumerate(cycle)}
    n = len(cycle)
    outer = {frozenset((cycle[i], cycle[(i + 1) % n])) for i in range(n)}
    chords = []
    for u, v in block.edges:
        if frozenset((u, v)) not in outer:
            chords.append((u, v))
    spans = sorted((tuple(sorted((pos[u], pos[v]))) for u, v in chords), key=lambda ab: (ab[0], -ab[1]))
    # crossing test: chords (a, b), (c, d) cross iff a < c < b < d
    open_ends: list[int] = []
    for a, b in spans:
        while open_ends and open_ends[-1] <= a:
            open_ends.pop()
        if open_ends and b > open_ends[-1]:
            raise NotOuterplanar("crossing chords", block.vertices)
        open_ends.append(b)
    return BlockEmbedding(index, _canonical_cycle(cycle), tuple(sorted(chords)))


def outer_embedding(g: Graph, bt: BlockTree | None = None) -> OuterEmbedding:
    bt = bt or block_cut_tree(g)
    embs = {i: _embed_block(i, bt.blocks[i]) for i in bt.nontrivial()}
    return OuterEmbedding(g, bt, embs)


def is_outerplanar(g: Graph) -> bool:
    try:
        outer_embedding(g)
    except NotOuterplanar:
        return False
    return True


# --- faces -----------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    block: int
    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def edges(self) -> list[tuple[int, int]]:
        c = self.cycle
        return [tuple(sorted((c[i], c[(i + 1) % len(c)]))) for i in range(len(c))]


@dataclass(frozen=True)
class WeakDual:
    faces: tuple[Face, ...]
    #: block index -> indices into ``faces``
    block_faces: dict[int, tuple[int, ...]]
    #: face index pairs sharing a chord
    adjacency: tuple[tuple[int, int], ...]
    #: sorted edge -> indices of the (one or two) faces containing it
    edge_faces: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)

    def neighbors(self, f: int) -> list[int]:
        return sorted({b if a == f else a for a, b in self.adjacency if f in (a, b)})

    def faces_of(self, v: int) -> list[int]:
        return [i for i, f in enumerate(self.faces) if v in f.cycle]


def _split_faces(cycle: tuple[int, ...], chords) -> list[list[int]]:
    """Faces of a cycle with non-crossing chords, by recursive splitting."""
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    reach = defaultdict(list)
    for u, v in chords:
        a, b = sorted((pos[u], pos[v]))
        reach[a].append(b)
    faces = []
    # interval (lo, hi) is closed by the edge cycle[lo]-cycle[hi]
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        face = [lo]
        p = lo
        while p != hi:
            q = max((b for b in reach[p] if b <= hi and (p, b) != (lo, hi)), default=p + 1)
            if q > p + 1:
                stack.append((p, q))
            face.append(q)
            p = q
        faces.append([cycle[i] for i in face])
    return faces


def weak_dual(emb: OuterEmbedding) -> WeakDual:
    faces: list[Face] = []
    block_faces = {}
    for bi in sorted(emb.blocks):
        be = emb.blocks[bi]
        found = sorted(_canonical_cycle(f) for f in _split_faces(be.cycle, be.chords))
        start = len(faces)
        faces += [Face(bi, f) for f in found]
        block_faces[bi] = tuple(range(start, len(faces)))
    for bi in range(len(emb.block_tree.blocks)):
        block_faces.setdefault(bi, ())
    edge_faces = defaultdict(list)
    for i, f in enumerate(faces):
        for e in f.edges():
            edge_faces[e].append(i)
    adjacency = sorted(tuple(fs) for fs in edge_faces.values() if len(fs) == 2)
    return WeakDual(
        tuple(faces),
        block_faces,
        tuple(adjacency),
        {e: tuple(fs) for e, fs in edge_faces.items()},
    )


def pendant_faces(g: Graph, wd: WeakDual, bt: BlockTree) -> list[int]:
    """Indices of pendant faces.

    A face is pendant when it is a leaf (degree at most one) of its block's
    face tree and carries no cut vertex, or when its boundary is a whole
    block containing at most one cut vertex.
    """
    out = []
    for i, f in enumerate(wd.faces):
        leaf = len(wd.neighbors(i)) <= 1
        if leaf and not any(v in bt.cut_vertices for v in f.cycle):
            out.append(i)
            continue
        block = bt.blocks[f.block]
        if len(wd.block_faces[f.block]) == 1 and bt.block_cut_count(f.block) <= 1:
            assert set(block.vertices) == set(f.cycle)
            out.append(i)
    return out


@dataclass
class Structure:
    """Bundle of the decompositions most algorithms need together."""

    graph: Graph
    blocks: BlockTree
    embedding: OuterEmbedding
    dual: WeakDual


def analyze(g: Graph) -> Structure:
    bt = block_cut_tree(g)
    emb = outer_embedding(g, bt)
    return Structure(g, bt, emb, weak_dual(emb))
