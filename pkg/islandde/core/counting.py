"""Floor arithmetic for fraction-of-population counts."""

import math

# Absorbs representation error such as (0.3 - 0.1) * 50 = 9.999999999999998
_FLOOR_SLACK = 1e-9


def fraction_count(fraction: float, total: int) -> int:
    """Return floor(fraction * total), robust to binary rounding of the fraction."""
    return max(0, math.floor(fraction * total + _FLOOR_SLACK))
