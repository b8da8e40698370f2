"""Command-line front end.

Graphs are read in the text format (``n m`` then ``m`` lines ``u v``; ``-``
reads standard input). Results are JSON on standard output; diagnostics go
to standard error.

Exit statuses: 0 success, 1 negative answer (UNSAT, not outerplanar,
violations found, no k within the limit), 2 usage or input error, 3 time or
memory budget exhausted.

Coloring files are JSON objects ``{"sequence": [..], "colors": {"v": class}}``
with an optional ``"labels"`` echo; class indices are 1-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import gadgets
from .constructive import color_112_2connected, color_1124
from .errors import (GraphInputError, MemoryBudgetExceeded, NotOuterplanar, NotSubcubic,
                     NotTwoConnected, PackingError, SolverTimeout)
from .graph import format_graph_text, is_subcubic, parse_graph_text, subdivide
from .solver import Pin, decide_backtracking, decide_dp_outerplanar, packing_chromatic_number
from .structure import analyze, block_cut_tree
from .verifier import Coloring, ColorSequence, verify_feasible_1124, verify_packing

BUDGET_ENV = "PACKCOLOR_BUDGET"

OK, NEGATIVE, USAGE, TIMEOUT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str):
    return parse_graph_text(_read(path))


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _default_budget() -> float | None:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return None
    try:
        return float(raw)
    except ValueError:
        raise GraphInputError(f"{BUDGET_ENV} must be a number of seconds, got {raw!r}") from None


def _sequence(text: str) -> ColorSequence:
    return ColorSequence.parse(text)


def _coloring_payload(c: Coloring, labels) -> dict:
    return json.loads(c.to_json(labels or None))


# --- subcommands -----------------------------------------------------------


def cmd_recognize(args) -> int:
    g, _ = _load_graph(args.file)
    bt = block_cut_tree(g)
    out = {
        "n": g.n,
        "m": g.m,
        "subcubic": is_subcubic(g),
        "blocks": len(bt.blocks),
        "cut_vertices": sorted(bt.cut_vertices),
    }
    try:
        st = analyze(g)
    except NotOuterplanar as exc:
        out.update(outerplanar=False, reason=str(exc), block=list(exc.block or ()))
        _emit(out)
        return NEGATIVE
    out.update(
        outerplanar=True,
        two_connected=len(bt.blocks) == 1 and not bt.blocks[0].trivial,
        outer_cycles=[list(st.embedding.blocks[i].cycle) for i in sorted(st.embedding.blocks)],
        faces=[list(f.cycle) for f in st.dual.faces],
    )
    _emit(out)
    return OK


def cmd_color(args) -> int:
    g, labels = _load_graph(args.file)
    s = args.sequence
    try:
        if s.values == (1, 1, 2):
            c = color_112_2connected(g)
        elif s.values == (1, 1, 2, 4):
            c = color_1124(g)
        else:
            print(f"color supports (1,1,2) and (1,1,2,4), not {s}", file=sys.stderr)
            return USAGE
    except (NotOuterplanar, NotSubcubic, NotTwoConnected) as exc:
        print(f"not in the supported graph class: {exc}", file=sys.stderr)
        return NEGATIVE
    _emit(_coloring_payload(c, labels))
    return OK


def _parse_pin(text: str, labels: dict) -> Pin:
    if "=" in text:
        v, rhs = text.split("=", 1)
        if v in labels:
            text = f"{labels[v]}={rhs}"
    return Pin.parse(text)


def cmd_solve(args) -> int:
    g, labels = _load_graph(args.file)
    pins = [_parse_pin(p, labels) for p in args.pin]
    budget = args.budget if args.budget is not None else _default_budget()
    if args.engine == "dp":
        try:
            res = decide_dp_outerplanar(g, args.sequence, pins, budget=budget)
        except NotOuterplanar as exc:
            print(f"dp engine needs an outerplanar graph: {exc}", file=sys.stderr)
            return NEGATIVE
        except MemoryBudgetExceeded as exc:
            _emit({"status": "MEMORY", "message": str(exc)})
            return TIMEOUT
    else:
        res = decide_backtracking(g, args.sequence, pins, budget=budget)
    payload = {"status": res.status, "sequence": list(args.sequence.values), "stats": res.stats}
    if res.sat:
        payload["coloring"] = _coloring_payload(res.coloring, labels)
    _emit(payload)
    return {"SAT": OK, "UNSAT": NEGATIVE}.get(res.status, TIMEOUT)


def cmd_pcn(args) -> int:
    g, _ = _load_graph(args.file)
    budget = args.budget if args.budget is not None else _default_budget()
    try:
        k = packing_chromatic_number(g, args.max, budget=budget)
    except SolverTimeout as exc:
        _emit({"pcn": None, "status": "TIMEOUT", "message": str(exc)})
        return TIMEOUT
    _emit({"pcn": k, "max": args.max})
    return OK if k is not None else NEGATIVE


def cmd_verify(args) -> int:
    g, _ = _load_graph(args.graph)
    c = Coloring.from_json(_read(args.coloring), g.n)
    s = args.sequence or c.sequence
    if s.values != c.sequence.values:
        c = Coloring(s, c.classes)
    if args.feasible:
        bad = verify_feasible_1124(g, c)
    else:
        bad = verify_packing(g, s, c)
    _emit({"ok": not bad, "sequence": list(s.values), "violations": [str(v) for v in bad]})
    return OK if not bad else NEGATIVE


def cmd_subdivide(args) -> int:
    g, _ = _load_graph(args.file)
    sm = subdivide(g)
    labels = {f"mid{u}_{v}": w for (u, v), w in sm.midpoint.items()}
    sys.stdout.write(format_graph_text(sm.graph, labels, comments=[f"subdivision of a graph on {g.n} vertices"]))
    return OK


GADGET_NAMES = {
    "ex13": lambda p: gadgets.example_c4_two_ears(),
    "unit": lambda p: gadgets.double_triangle_unit(),
    "g1": lambda p: gadgets.gadget_g1(with_pendant=p),
    "g2": lambda p: gadgets.gadget_g2(with_pendant=p),
    "bigg": lambda p: gadgets.gadget_big_g(),
    "g3": lambda p: gadgets.gadget_g3(with_pendant=p),
    "h": lambda p: gadgets.gadget_h(),
    "petersen": lambda p: gadgets.petersen(),
}


def cmd_gadget(args) -> int:
    lg = GADGET_NAMES[args.name](args.pendant)
    sys.stdout.write(format_graph_text(lg.graph, lg.labels, comments=[f"gadget {args.name}"]))
    return OK


def cmd_gen(args) -> int:
    g = gadgets.random_outerplanar_subcubic(args.n, args.seed, two_connected=args.two_connected)
    sys.stdout.write(format_graph_text(g, comments=[f"seed {args.seed}"]))
    return OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="packcolor", description="Packing S-colorings of subcubic outerplanar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="outerplanarity, blocks and faces")
    r.add_argument("file", nargs="?", default="-")
    r.set_defaults(func=cmd_recognize)

    c = sub.add_parser("color", help="constructive (1,1,2) or feasible (1,1,2,4) coloring")
    c.add_argument("--sequence", type=_sequence, required=True)
    c.add_argument("file", nargs="?", default="-")
    c.set_defaults(func=cmd_color)

    s = sub.add_parser("solve", help="exact packing S-colorability")
    s.add_argument("--sequence", type=_sequence, required=True)
    s.add_argument("--pin", action="append", default=[], metavar="V=C",
                   help="force vertex V (id or label) into class C, or C1|C2")
    s.add_argument("--engine", choices=("backtrack", "dp"), default="backtrack")
    s.add_argument("--budget", type=float, default=None, help=f"seconds (default ${BUDGET_ENV})")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_solve)

    k = sub.add_parser("pcn", help="packing chromatic number")
    k.add_argument("--max", type=int, default=10)
    k.add_argument("--budget", type=float, default=None)
    k.add_argument("file", nargs="?", default="-")
    k.set_defaults(func=cmd_pcn)

    v = sub.add_parser("verify", help="check a coloring file against a graph")
    v.add_argument("--sequence", type=_sequence, default=None)
    v.add_argument("--coloring", required=True)
    v.add_argument("--feasible", action="store_true", help="also check conditions (A) and (B)")
    v.add_argument("graph", nargs="?", default="-")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("subdivide", help="replace every edge by a path of length two")
    d.add_argument("file", nargs="?", default="-")
    d.set_defaults(func=cmd_subdivide)

    gd = sub.add_parser("gadget", help="emit a named construction")
    gd.add_argument("name", choices=sorted(GADGET_NAMES))
    gd.add_argument("--pendant", action="store_true", help="include the optional pendant vertex")
    gd.set_defaults(func=cmd_gadget)

    gn = sub.add_parser("gen", help="random subcubic outerplanar graph")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--seed", type=int, required=True)
    gn.add_argument("--two-connected", action="store_true")
    gn.set_defaults(func=cmd_gen)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except (PackingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
