from .backtrack import decide_backtracking, enumerate_colorings
from .common import Pin, SolveResult
from .dp import decide_dp_outerplanar
from .pcn import packing_chromatic_number

__all__ = [
    "Pin",
    "SolveResult",
    "decide_backtracking",
    "decide_dp_outerplanar",
    "enumerate_colorings",
    "packing_chromatic_number",
]
