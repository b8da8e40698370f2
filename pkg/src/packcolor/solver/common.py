"""Result and pin types shared by the exact solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..errors import ClassOutOfRange, GraphInputError
from ..verifier import Coloring


@dataclass(frozen=True)
class Pin:
    """Restrict ``vertex`` to one class, or to the set ``allowed``."""

    vertex: int
    cls: int | None = None
    allowed: frozenset[int] | None = None

    def classes(self, k: int) -> frozenset[int]:
        if self.cls is not None:
            return frozenset({self.cls})
        return frozenset(self.allowed if self.allowed is not None else range(1, k + 1))

    @classmethod
    def parse(cls, text: str) -> Pin:
        """``"v=c"`` pins one class; ``"v=c1|c2"`` allows several."""
        try:
            v, rhs = text.split("=")
            opts = [int(x) for x in rhs.split("|")]
        except ValueError as exc:
            raise GraphInputError(f"bad pin {text!r}, expected vertex=class") from exc
        if len(opts) == 1:
            return cls(int(v), opts[0])
        return cls(int(v), allowed=frozenset(opts))


def normalize_pins(pins: Iterable[Pin], n: int, k: int) -> dict[int, frozenset[int]]:
    out: dict[int, frozenset[int]] = {}
    for p in pins:
        if not 0 <= p.vertex < n:
            raise GraphInputError(f"pinned vertex {p.vertex} outside [0, {n})")
        allowed = p.classes(k)
        if any(not 1 <= c <= k for c in allowed):
            raise ClassOutOfRange(f"pin on {p.vertex} uses a class outside 1..{k}")
        if p.vertex in out:
            raise GraphInputError(f"vertex {p.vertex} pinned twice")
        out[p.vertex] = allowed
    return out


@dataclass
class SolveResult:
    """``status`` is ``"SAT"``, ``"UNSAT"`` or ``"TIMEOUT"``."""

    status: str
    coloring: Coloring | None = None
    stats: dict = field(default_factory=dict)

    @property
    def sat(self) -> bool:
        return self.status == "SAT"

    @property
    def unsat(self) -> bool:
        return self.status == "UNSAT"
