"""Small shared numeric helpers."""

import math


def round_half_up(x: float) -> int:
    """Round to nearest integer, halves away from zero toward +inf.

    Used everywhere an integer is derived from a real (font sizes, group
    counts, cycle counts, frame counts) so the rule is identical across
    modules and across reimplementations.
    """
    return math.floor(x + 0.5)


def clamp(x: float, lo: float, hi: float) -> float:
    return lo if x < lo else hi if x > hi else x


def clamp01(x: float) -> float:
    return clamp(x, 0.0, 1.0)
