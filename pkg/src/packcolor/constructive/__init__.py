from .general import color_1124
from .subdivision import lift_to_subdivision, remap_sequence
from .two_connected import color_112_2connected, color_112_with_distinct_pair

__all__ = [
    "color_112_2connected",
    "color_112_with_distinct_pair",
    "color_1124",
    "lift_to_subdivision",
    "remap_sequence",
]
