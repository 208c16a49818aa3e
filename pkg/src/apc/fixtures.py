"""Small hand-built instances used by the tests, the CLI and the README.

Vertices ``x0..x3`` are ids 0..3 and ``y0..y3`` are ids 4..7. Both summands
are 4-cycles colored R, B, R, B starting from the 0 -> 1 edge.
"""

from __future__ import annotations

from apc.cgs import CgsInstance, Summand, build_cgs, canonical_summands
from apc.graph import BLUE, RED

X = (0, 1, 2, 3)
Y = (4, 5, 6, 7)

# the four parallel classes (x index, y index, color)
FIX8_CLASSES = (
    ((0, 0, RED), (1, 1, BLUE), (2, 2, RED), (3, 3, BLUE)),
    ((0, 1, BLUE), (1, 0, RED), (2, 3, BLUE), (3, 2, RED)),
    ((0, 2, BLUE), (3, 1, RED), (2, 0, BLUE), (1, 3, RED)),
    ((0, 3, BLUE), (3, 0, RED), (2, 1, BLUE), (1, 2, RED)),
)


def _summands() -> list[Summand]:
    return canonical_summands([4, 4])


def _fix8_exterior() -> dict:
    return {(X[i], Y[j]): c for cls in FIX8_CLASSES for i, j, c in cls}


def fix8() -> CgsInstance:
    return build_cgs(_summands(), _fix8_exterior())


def fix8gp() -> CgsInstance:
    """FIX8 with x1y1 recolored red, creating the good pair (x0y0, x1y1)."""
    ext = _fix8_exterior()
    ext[(X[1], Y[1])] = RED
    return build_cgs(_summands(), ext)


def fix8s() -> CgsInstance:
    """No good pair, but every y_j is singular: c(x_i y_j) is red iff j is even."""
    ext = {(X[i], Y[j]): RED if j % 2 == 0 else BLUE for i in range(4) for j in range(4)}
    return build_cgs(_summands(), ext)


FIXTURES = {"fix8": fix8, "fix8gp": fix8gp, "fix8s": fix8s}
