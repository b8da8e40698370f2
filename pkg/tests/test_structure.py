import networkx as nx
import pytest

from conftest import complete, cycle, path
from oracles import all_graphs, is_outerplanar_nx, to_nx
from packcolor.errors import NotOuterplanar
from packcolor.gadgets import (GADGETS, double_triangle_unit, example_c4_two_ears, gadget_g3, gadget_h,
                               random_outerplanar_subcubic)
from packcolor.graph import from_edge_list
from packcolor.structure import (analyze, block_cut_tree, is_outerplanar, is_two_connected, outer_embedding,
                                 pendant_faces, weak_dual)

K4_MINUS_E = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
K23 = from_edge_list(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def check_block_tree(g):
    bt = block_cut_tree(g)
    h = to_nx(g)
    # isolated vertices form single-vertex blocks; networkx omits them
    singles = sorted(b.vertices[0] for b in bt.blocks if len(b.vertices) == 1)
    assert singles == sorted(v for v in g.vertices() if g.degree(v) == 0)
    ours = sorted(tuple(sorted(b.vertices)) for b in bt.blocks if len(b.vertices) > 1)
    theirs = sorted(tuple(sorted(c)) for c in nx.biconnected_components(h))
    assert ours == theirs
    assert set(bt.cut_vertices) == set(nx.articulation_points(h))
    owners = {}
    for i, b in enumerate(bt.blocks):
        assert b.trivial == (len(b.vertices) <= 2)
        for u, v in g.edges:
            if u in b.vertices and v in b.vertices:
                owners.setdefault((u, v), []).append(i)
    assert all(len(o) == 1 for o in owners.values()) and len(owners) == g.m
    forest = nx.Graph()
    forest.add_edges_from((("b", i), ("c", v)) for i, v in bt.incidences)
    assert forest.number_of_nodes() == 0 or nx.is_forest(forest)
    for i, v in bt.incidences:
        assert v in bt.cut_vertices and v in bt.blocks[i].vertices
    return bt


def check_embedding(g):
    st = analyze(g)
    bt, emb, wd = st.blocks, st.embedding, st.dual
    for bi in bt.nontrivial():
        be = emb.blocks[bi]
        verts = bt.blocks[bi].vertices
        assert sorted(be.cycle) == sorted(verts)
        L = len(be.cycle)
        ring = {tuple(sorted((be.cycle[i], be.cycle[(i + 1) % L]))) for i in range(L)}
        assert all(g.has_edge(*e) for e in ring)
        block_edges = {(u, v) for u, v in g.edges if u in verts and v in verts}
        assert block_edges == ring | {tuple(sorted(c)) for c in be.chords}
        assert not ring & {tuple(sorted(c)) for c in be.chords}
        faces = wd.block_faces[bi]
        assert len(faces) == len(be.chords) + 1
        assert sum(len(wd.faces[f]) for f in faces) == L + 2 * len(be.chords)
        tree = nx.Graph()
        tree.add_nodes_from(faces)
        tree.add_edges_from((a, b) for a, b in wd.adjacency if a in faces)
        assert nx.is_tree(tree)
        for f in faces:
            cyc = wd.faces[f].cycle
            # chordless boundary cycle, canonical orientation
            sub, _ = g.induced(cyc)
            assert sub.m == len(cyc) and all(sub.degree(v) == 2 for v in range(sub.n))
            assert cyc[0] == min(cyc) and cyc[1] < cyc[-1]
    for bi, b in enumerate(bt.blocks):
        if b.trivial:
            assert bi not in emb.blocks and not wd.block_faces.get(bi, ())
    return st


def test_block_examples():
    bt = block_cut_tree(example_c4_two_ears().graph)
    assert len(bt.blocks) == 1 and not bt.cut_vertices
    bt = block_cut_tree(path(3))
    assert len(bt.blocks) == 2 and all(b.trivial for b in bt.blocks) and bt.cut_vertices == {1}
    bt = check_block_tree(gadget_h().graph)
    assert len(bt.nontrivial()) == 22
    assert sum(b.trivial for b in bt.blocks) == 21


def test_block_tree_corpus(general_corpus):
    for g in general_corpus:
        check_block_tree(g)


def test_embedding_examples():
    emb = outer_embedding(cycle(5))
    (be,) = emb.blocks.values()
    assert sorted(be.cycle) == list(range(5)) and be.chords == ()
    with pytest.raises(NotOuterplanar) as info:
        outer_embedding(complete(4))
    assert sorted(info.value.block) == [0, 1, 2, 3]
    with pytest.raises(NotOuterplanar):
        outer_embedding(K23)
    (be,) = outer_embedding(K4_MINUS_E).blocks.values()
    assert len(be.cycle) == 4 and [tuple(sorted(c)) for c in be.chords] == [(0, 2)]


def test_weak_dual_examples():
    wd = weak_dual(outer_embedding(K4_MINUS_E))
    assert sorted(len(f) for f in wd.faces) == [3, 3] and len(wd.adjacency) == 1
    wd = weak_dual(outer_embedding(cycle(6)))
    assert [len(f) for f in wd.faces] == [6] and not wd.adjacency
    st = check_embedding(double_triangle_unit().graph)
    tree = nx.Graph(list(st.dual.adjacency))
    lengths = {f: len(st.dual.faces[f]) for f in tree}
    mid = [f for f in tree if tree.degree(f) == 2]
    assert len(mid) == 1 and lengths[mid[0]] == 4
    assert sorted(lengths.values()) == [3, 3, 4] and nx.is_isomorphic(tree, nx.path_graph(3))


def test_pendant_face_examples():
    st = analyze(K4_MINUS_E)
    assert len(pendant_faces(K4_MINUS_E, st.dual, st.blocks)) == 2
    c6 = cycle(6)
    st = analyze(c6)
    assert pendant_faces(c6, st.dual, st.blocks) == [0]


def test_pendant_block_face():
    # triangle hanging from a path through one cut vertex
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    st = analyze(g)
    assert pendant_faces(g, st.dual, st.blocks) == [0]


def test_recognizer_matches_oracle_exhaustively():
    for n in range(1, 8):
        for g in all_graphs(n):
            assert is_outerplanar(g) == is_outerplanar_nx(to_nx(g)), g.edges
            if is_outerplanar(g):
                check_embedding(g)


def test_recognizer_matches_oracle_on_eight_vertices():
    for g in all_graphs(8):
        assert is_outerplanar(g) == is_outerplanar_nx(to_nx(g)), g.edges


def test_two_connected():
    assert is_two_connected(cycle(4))
    assert not is_two_connected(path(3))
    # a lone edge counts as a trivial block, not as 2-connected
    assert not is_two_connected(from_edge_list(2, [(0, 1)]))



def test_generator_samples_accepted(general_corpus, block_corpus):
    for g in general_corpus + block_corpus:
        assert is_outerplanar(g)
        check_embedding(g)
    for g in block_corpus:
        assert len(block_cut_tree(g).blocks) == 1


def test_triangle_faces_are_pendant(block_corpus):
    seen = 0
    for g in block_corpus:
        st = analyze(g)
        pend = set(pendant_faces(g, st.dual, st.blocks))
        for i, f in enumerate(st.dual.faces):
            if len(f) == 3:
                seen += 1
                assert i in pend
    assert seen > 50


def test_gadgets_outerplanar():
    for name, make in GADGETS.items():
        g = make().graph
        assert is_outerplanar(g) == (name != "petersen")
    assert is_outerplanar(gadget_g3(with_pendant=True).graph)


def test_random_large_outerplanar():
    for seed in range(20):
        g = random_outerplanar_subcubic(200, seed)
        assert is_outerplanar(g) == is_outerplanar_nx(to_nx(g))
