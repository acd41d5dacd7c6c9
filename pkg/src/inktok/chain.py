"""Freeman chain codes and Bresenham segment decomposition.

A segment between two grid points is rewritten as the exact sequence of
unit king-moves a Bresenham line walk takes from one to the other. The walk
is pinned down to one variant so that every implementation, in any language,
produces identical move sequences:

  a = |dx|, b = |dy|; x is the driving axis when a >= b, else y.
  D = 2 * minor - major to start. Each step looks at the current D:
  D > 0 takes the diagonal move and adds 2 * (minor - major);
  D <= 0 takes the straight move along the driving axis and adds 2 * minor.

A tie (D == 0) therefore steps straight. The walk emits exactly
max(|dx|, |dy|) moves and visits only integer points.
"""

from __future__ import annotations

from enum import Enum

from .errors import Overflow
from .ink import INT32_MAX, INT32_MIN


class Direction(Enum):
    """The eight unit moves, numbered counterclockwise from east."""

    E = (1, 0)
    NE = (1, 1)
    N = (0, 1)
    NW = (-1, 1)
    W = (-1, 0)
    SW = (-1, -1)
    S = (0, -1)
    SE = (1, -1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @property
    def code(self) -> int:
        """Freeman code 0..7 (E=0, NE=1, ... SE=7)."""
        return _CODE_OF[self]


_DIRECTIONS: tuple[Direction, ...] = (
    Direction.E,
    Direction.NE,
    Direction.N,
    Direction.NW,
    Direction.W,
    Direction.SW,
    Direction.S,
    Direction.SE,
)
_CODE_OF = {d: i for i, d in enumerate(_DIRECTIONS)}

# Freeman code for a unit move, indexed by [dx + 1][dy + 1]. None marks the
# zero move, which never occurs in a decomposition step.
_CODE_TABLE = (
    (5, 4, 3),
    (6, None, 2),
    (7, 0, 1),
)


def _decompose_into(x0: int, y0: int, x1: int, y1: int, out: list, base: int) -> None:
    """Append base + Freeman code for every step of the walk p -> q to `out`.

    Shared inner loop: chain-code callers pass base=0, token-level callers
    pass their direction id offset so no intermediate list is built.
    """
    dx = x1 - x0
    dy = y1 - y0
    a = dx if dx >= 0 else -dx
    b = dy if dy >= 0 else -dy
    if a == 0 and b == 0:
        return
    sx = 1 if dx > 0 else (-1 if dx < 0 else 0)
    sy = 1 if dy > 0 else (-1 if dy < 0 else 0)
    append = out.append
    if a >= b:
        straight = base + _CODE_TABLE[sx + 1][1]
        diagonal = base + _CODE_TABLE[sx + 1][sy + 1] if sy else straight
        d = 2 * b - a
        add_diag = 2 * (b - a)
        add_straight = 2 * b
        for _ in range(a):
            if d > 0:
                append(diagonal)
                d += add_diag
            else:
                append(straight)
                d += add_straight
    else:
        straight = base + _CODE_TABLE[1][sy + 1]
        diagonal = base + _CODE_TABLE[sx + 1][sy + 1] if sx else straight
        d = 2 * a - b
        add_diag = 2 * (a - b)
        add_straight = 2 * a
        for _ in range(b):
            if d > 0:
                append(diagonal)
                d += add_diag
            else:
                append(straight)
                d += add_straight


def bresenham_decompose(p: tuple[int, int], q: tuple[int, int]) -> list[Direction]:
    """Decompose the segment p -> q into unit moves.

    Returns max(|dx|, |dy|) moves; the empty list when p == q. Applying the
    moves in order from p by `step` lands exactly on q, and every visited
    point lies on the Bresenham rasterization of the segment.
    """
    codes: list[int] = []
    _decompose_into(int(p[0]), int(p[1]), int(q[0]), int(q[1]), codes, 0)
    return [_DIRECTIONS[c] for c in codes]


def step(p: tuple[int, int], d: Direction) -> tuple[int, int]:
    """Move one unit from p along d. Raises Overflow outside 32-bit range."""
    x = int(p[0]) + d.value[0]
    y = int(p[1]) + d.value[1]
    if not (INT32_MIN <= x <= INT32_MAX and INT32_MIN <= y <= INT32_MAX):
        raise Overflow(f"step past signed 32-bit range at ({x}, {y})")
    return (x, y)
