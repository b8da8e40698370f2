"""The nine acceptance criteria, each with its time limit.

Every criterion prints one PASS/FAIL line (collected into the pytest summary
and also written immediately to stdout). Run standalone with
``python3 tests/test_acceptance.py`` or through pytest.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest  # noqa: E402

from conftest import ACCEPTANCE_LINES  # noqa: E402
from oracles import all_graphs, enumerate_colorable, two_connected_outerplanar_subcubic_filtered  # noqa: E402
from packcolor.constructive import (color_112_2connected, color_1124, lift_to_subdivision,  # noqa: E402
                                    remap_sequence)
from packcolor.gadgets import (GADGETS, example_c4_two_ears, gadget_big_g, gadget_g1, gadget_g2,  # noqa: E402
                               gadget_g3, gadget_h, petersen, random_outerplanar_subcubic,
                               two_connected_outerplanar_subcubic)
from packcolor.graph import subdivide  # noqa: E402
from packcolor.solver import Pin, decide_backtracking, decide_dp_outerplanar  # noqa: E402
from packcolor.structure import block_cut_tree  # noqa: E402
from packcolor.verifier import verify_feasible_1124, verify_packing  # noqa: E402


def criterion(number, title, limit):
    """Time the body, enforce ``limit`` seconds and record a PASS/FAIL line."""
    def wrap(body):
        def test():
            start = time.monotonic()
            detail, ok = "", False
            try:
                detail = body() or ""
                elapsed = time.monotonic() - start
                ok = elapsed < limit
                if not ok:
                    detail += f" exceeded {limit:g} s"
            except AssertionError as exc:
                elapsed = time.monotonic() - start
                detail = f"assertion failed: {exc}"
                raise
            finally:
                elapsed = time.monotonic() - start
                line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{elapsed:.1f} s / {limit:g} s] {detail}"
                ACCEPTANCE_LINES.append(line)
                print(line, flush=True)
            assert ok, line
        test.__name__ = body.__name__
        return test
    return wrap


@criterion(1, "example graph UNSAT for (1,1,3) and (1,2,2), SAT for (1,1,2)", 1)
def test_c1_example_sharpness():
    g = example_c4_two_ears().graph
    assert decide_backtracking(g, (1, 1, 3)).unsat
    assert decide_backtracking(g, (1, 2, 2)).unsat
    res = decide_backtracking(g, (1, 1, 2))
    assert res.sat and verify_packing(g, (1, 1, 2), res.coloring) == []


@criterion(2, "G1 with pendant z6 pinned to the s=5 class is UNSAT, SAT unpinned", 10)
def test_c2_g1_pin():
    lg = gadget_g1(with_pendant=True)
    s = (1, 1, 2, 5)
    assert decide_backtracking(lg.graph, s, [Pin(lg["z6"], 4)]).unsat
    res = decide_backtracking(lg.graph, s)
    assert res.sat and verify_packing(lg.graph, s, res.coloring) == []


@criterion(3, "H (66 vertices) UNSAT under (1,2,2,4) and (1,1,3,4) by DP", 600)
def test_c3_h():
    g = gadget_h().graph
    assert g.n == 66
    times = []
    for s in [(1, 2, 2, 4), (1, 1, 3, 4)]:
        t = time.monotonic()
        assert decide_dp_outerplanar(g, s).unsat, s
        times.append(time.monotonic() - t)
        assert times[-1] < 300
    return "each " + ", ".join(f"{x:.2f} s" for x in times)


@criterion(4, "G (276 vertices) UNSAT under (1,1,2,5) by DP", 1800)
def test_c4_big_g():
    g = gadget_big_g().graph
    assert g.n == 276
    res = decide_dp_outerplanar(g, (1, 1, 2, 5))
    assert res.unsat
    return f"{res.stats['states']} profile states"


@criterion(5, "(1,1,2) colorer on every 2-connected graph with <= 9 vertices and 1000 random ones", 600)
def test_c5_colorer_112():
    exhaustive = 0
    for n in range(3, 10):
        for g in two_connected_outerplanar_subcubic(n):
            assert verify_packing(g, (1, 1, 2), color_112_2connected(g)) == []
            exhaustive += 1
    filtered = 0
    for n in range(3, 9):
        for g in two_connected_outerplanar_subcubic_filtered(n):
            assert verify_packing(g, (1, 1, 2), color_112_2connected(g)) == []
            filtered += 1
    for seed in range(1000):
        g = random_outerplanar_subcubic(3 + seed % 38, seed, two_connected=True)
        assert g.n <= 40
        assert verify_packing(g, (1, 1, 2), color_112_2connected(g)) == [], seed
    return f"{exhaustive} enumerated + {filtered} filtered from all graphs + 1000 random"


@criterion(6, "feasible (1,1,2,4) colorer on 1000 random graphs (n <= 60) and all gadgets", 600)
def test_c6_colorer_1124():
    bridged = cut = 0
    for seed in range(1000):
        g = random_outerplanar_subcubic(3 + seed % 58, seed)
        assert g.n <= 60
        bt = block_cut_tree(g)
        bridged += any(len(b.vertices) == 2 for b in bt.blocks)
        cut += bool(bt.cut_vertices)
        assert verify_feasible_1124(g, color_1124(g)) == [], seed
    gadgets = [make().graph for name, make in GADGETS.items() if name != "petersen"]
    gadgets += [make(with_pendant=True).graph for make in (gadget_g1, gadget_g2, gadget_g3)]
    for g in gadgets:
        assert verify_feasible_1124(g, color_1124(g)) == []
    assert bridged and cut
    return f"{bridged} samples with bridges, {cut} with cut vertices, {len(gadgets)} gadgets"


@criterion(7, "lift + remap gives (1,2,3,4) and (1,2,3,4,5) colorings of D(G)", 300)
def test_c7_subdivision_pipeline():
    for seed in range(100):
        g = random_outerplanar_subcubic(3 + seed % 38, 5000 + seed, two_connected=True)
        s2, c2 = lift_to_subdivision(g, (1, 1, 2), color_112_2connected(g))
        assert s2.values == (1, 3, 3, 5)
        c3 = remap_sequence(c2, s2, (1, 2, 3, 4))
        assert verify_packing(subdivide(g).graph, (1, 2, 3, 4), c3) == []
    for seed in range(100):
        g = random_outerplanar_subcubic(3 + seed % 58, 7000 + seed)
        s2, c2 = lift_to_subdivision(g, (1, 1, 2, 4), color_1124(g))
        c3 = remap_sequence(c2, s2, (1, 2, 3, 4, 5))
        assert verify_packing(subdivide(g).graph, (1, 2, 3, 4, 5), c3) == []


@criterion(8, "backtracking = enumeration on all graphs <= 8 vertices; DP = backtracking on 500 random", 900)
def test_c8_oracle_equivalence():
    graphs = [g for n in range(9) for g in all_graphs(n)]
    assert len(all_graphs(8)) == 12346
    for s in [(1, 1, 2), (1, 2, 2), (1, 1, 3)]:
        for g in graphs:
            assert decide_backtracking(g, s).sat == enumerate_colorable(g, s), (s, g.edges)
    seqs = [(1, 1, 2), (1, 2, 2), (1, 1, 2, 4), (1, 1, 2, 5)]
    outcomes = {"SAT": 0, "UNSAT": 0}
    for i in range(500):
        g = random_outerplanar_subcubic(3 + i % 18, 20000 + i)
        s = seqs[i % 4]
        a, b = decide_backtracking(g, s), decide_dp_outerplanar(g, s)
        assert a.status == b.status, (i, s)
        outcomes[b.status] += 1
    assert outcomes["SAT"] and outcomes["UNSAT"]
    return f"{len(graphs)} graphs x 3 sequences; DP sample {outcomes}"


@criterion(9, "Petersen UNSAT under (1,1,2,2)", 30)
def test_c9_petersen():
    assert decide_backtracking(petersen().graph, (1, 1, 2, 2)).unsat


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
