"""Color sequences, colorings and packing-coloring verification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ClassOutOfRange, GraphInputError, WrongSequence
from .graph import Graph, bfs_distances
from .structure import block_cut_tree

#: Display names of the classes of (1, 1, 2, 4).
FEASIBLE_NAMES = {1: "1a", 2: "1b", 3: "2", 4: "4"}


@dataclass(frozen=True)
class ColorSequence:
    """Non-decreasing thresholds ``s_1 <= ... <= s_k``; class ``i`` is 1-based."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        if not vals:
            raise WrongSequence("color sequence must be non-empty")
        if any(x < 1 for x in vals):
            raise WrongSequence(f"entries must be positive: {vals}")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise WrongSequence(f"sequence must be non-decreasing: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str) -> ColorSequence:
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").strip("()").split(",")))
        except ValueError as exc:
            raise WrongSequence(f"cannot parse sequence {text!r}") from exc

    @property
    def k(self) -> int:
        return len(self.values)

    def s(self, cls_index: int) -> int:
        return self.values[cls_index - 1]

    def classes(self) -> range:
        return range(1, self.k + 1)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


def as_sequence(s) -> ColorSequence:
    return s if isinstance(s, ColorSequence) else ColorSequence(tuple(s))


@dataclass(frozen=True)
class Coloring:
    """Class index per vertex (``None`` = uncolored) under a sequence."""

    sequence: ColorSequence
    classes: tuple[int | None, ...]

    def __post_init__(self):
        object.__setattr__(self, "sequence", as_sequence(self.sequence))
        object.__setattr__(self, "classes", tuple(self.classes))
        for v, c in enumerate(self.classes):
            if c is not None and not 1 <= c <= self.sequence.k:
                raise ClassOutOfRange(f"vertex {v} has class {c}, sequence has {self.sequence.k} classes")

    def __getitem__(self, v: int) -> int | None:
        return self.classes[v]

    def __len__(self):
        return len(self.classes)

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.classes)

    def class_members(self, i: int) -> list[int]:
        return [v for v, c in enumerate(self.classes) if c == i]

    def used_classes(self) -> set[int]:
        return {c for c in self.classes if c is not None}

    def restrict(self, keep: Iterable[int]) -> Coloring:
        keep = set(keep)
        return Coloring(self.sequence, [c if v in keep else None for v, c in enumerate(self.classes)])

    def to_json(self, labels: dict[str, int] | None = None) -> str:
        payload = {
            "sequence": list(self.sequence.values),
            "colors": {str(v): c for v, c in enumerate(self.classes) if c is not None},
        }
        if labels:
            payload["labels"] = labels
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str, n: int) -> Coloring:
        try:
            data = json.loads(text)
            seq = ColorSequence(tuple(data["sequence"]))
            classes: list[int | None] = [None] * n
            for key, c in data["colors"].items():
                v = int(key)
                if not 0 <= v < n:
                    raise GraphInputError(f"colored vertex {v} outside [0, {n})")
                classes[v] = int(c)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphInputError):
                raise
            raise GraphInputError(f"malformed coloring: {exc}") from exc
        return cls(seq, classes)


def make_coloring(s, classes: Sequence[int | None]) -> Coloring:
    return Coloring(as_sequence(s), tuple(classes))


@dataclass(frozen=True, order=True)
class Violation:
    """A broken constraint.

    ``condition`` is ``"packing"``, ``"A"`` or ``"B"``. For packing
    violations ``distance < required``.
    """

    condition: str
    cls: int
    u: int
    v: int
    distance: float
    required: int

    def __str__(self):
        if self.condition == "packing":
            return (f"class {self.cls}: vertices {self.u},{self.v} at distance "
                    f"{self.distance} < {self.required}")
        if self.condition == "A":
            return f"condition (A): class 4 on {self.u} and {self.v} in one block"
        return (f"condition (B): degree<=2 vertex {self.u} of class 3 has class-4 "
                f"vertex {self.v} at distance {self.distance}")


def verify_packing(g: Graph, s, c: Coloring, allow_partial: bool = False) -> list[Violation]:
    """All same-class pairs closer than their threshold; empty list means valid.

    Runs a breadth-first search truncated at radius ``s_i`` from each
    colored vertex.
    """
    s = as_sequence(s)
    if len(c) != g.n:
        raise GraphInputError(f"coloring covers {len(c)} vertices, graph has {g.n}")
    for v, cl in enumerate(c.classes):
        if cl is None:
            if not allow_partial:
                raise GraphInputError(f"vertex {v} is uncolored")
        elif not 1 <= cl <= s.k:
            raise ClassOutOfRange(f"vertex {v} has class {cl} outside 1..{s.k}")
    out = []
    for u, cl in enumerate(c.classes):
        if cl is None:
            continue
        req = s.s(cl) + 1
        for v, d in bfs_distances(g, u, radius=req - 1).items():
            if v > u and c.classes[v] == cl:
                out.append(Violation("packing", cl, u, v, d, req))
    out.sort(key=lambda x: (x.cls, x.u, x.v))
    return out


def verify_feasible_1124(g: Graph, c: Coloring) -> list[Violation]:
    """Packing (1,1,2,4) check plus conditions (A) and (B).

    (A): class 4 at most once per block. (B): a vertex of degree at most 2 in
    class 3 has no class-4 vertex within distance two.
    """
    if c.sequence.values != (1, 1, 2, 4):
        raise WrongSequence(f"feasibility is defined for (1,1,2,4), got {c.sequence}")
    out = verify_packing(g, c.sequence, c)
    bt = block_cut_tree(g)
    for b in bt.blocks:
        fours = [v for v in b.vertices if c[v] == 4]
        for i in range(len(fours)):
            for j in range(i + 1, len(fours)):
                out.append(Violation("A", 4, fours[i], fours[j], 0, 0))
    for v in g.vertices():
        if c[v] == 3 and g.degree(v) <= 2:
            for w, d in sorted(bfs_distances(g, v, radius=2).items()):
                if w != v and c[w] == 4:
                    out.append(Violation("B", 3, v, w, d, 3))
    return sorted(set(out), key=lambda x: (x.condition != "packing", x.condition, x.cls, x.u, x.v))
