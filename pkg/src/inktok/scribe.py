"""Pen-aware chain-code tokens over integer ink.

The base alphabet has ten content tokens: the eight unit directions plus
DOWN and UP pen transitions. Four special ids sit in front of them so the
id layout is fixed once and for all:

  PAD=0  START=1  END=2  UNKNOWN=3
  E=4 NE=5 N=6 NW=7 W=8 SW=9 S=10 SE=11
  DOWN=12  UP=13

Encoding walks the ink in order. Each stroke opens with DOWN, writes the
decomposition of every consecutive point pair, and closes with UP. Between
strokes the decomposition of the pen-up travel (last point of one stroke to
first point of the next) is written without pen tokens. A sequence decodes
from the first point of the ink, so tokenization is translation invariant
and the pair (tokens, origin) is lossless.
"""

from __future__ import annotations

from .chain import _decompose_into
from .errors import InvalidToken
from .ink import IntegerInk, QuantizationParams, RawInk, dequantize

PAD = 0
START = 1
END = 2
UNKNOWN = 3
E, NE, N, NW, W, SW, S, SE = 4, 5, 6, 7, 8, 9, 10, 11
DOWN = 12
UP = 13

BASE_SIZE = 14
DIRECTION_BASE = 4  # id of Freeman code 0

TOKEN_NAMES = (
    "PAD",
    "START",
    "END",
    "UNKNOWN",
    "E",
    "NE",
    "N",
    "NW",
    "W",
    "SW",
    "S",
    "SE",
    "DOWN",
    "UP",
)

# Unit displacement per direction id (Freeman order from east, counterclockwise).
_MOVES = {
    E: (1, 0),
    NE: (1, 1),
    N: (0, 1),
    NW: (-1, 1),
    W: (-1, 0),
    SW: (-1, -1),
    S: (0, -1),
    SE: (1, -1),
}


def scribe_tokenize(ink: IntegerInk) -> list[int]:
    """Encode integer ink as a flat list of base token ids."""
    tokens: list[int] = []
    append = tokens.append
    strokes = ink.strokes
    prev_x = prev_y = 0
    for j, stroke in enumerate(strokes):
        flat = stroke.ravel().tolist()
        n = len(flat)
        if j > 0:
            _decompose_into(prev_x, prev_y, flat[0], flat[1], tokens, DIRECTION_BASE)
        append(DOWN)
        x0 = flat[0]
        y0 = flat[1]
        for i in range(2, n, 2):
            x1 = flat[i]
            y1 = flat[i + 1]
            _decompose_into(x0, y0, x1, y1, tokens, DIRECTION_BASE)
            x0 = x1
            y0 = y1
        append(UP)
        prev_x = x0
        prev_y = y0
    return tokens


def scribe_detokenize(tokens, origin: tuple[int, int] = (0, 0)) -> IntegerInk:
    """Replay a token sequence into integer ink. Total over the base alphabet.

    The pen starts lifted at `origin`. DOWN opens a stroke at the current
    position (a second DOWN while drawing does nothing), UP closes the open
    stroke (a second UP does nothing), a direction moves one unit and appends
    the new position only while the pen is down. PAD, START, END and UNKNOWN
    are skipped with zero displacement. A stroke still open when the tokens
    run out is closed. Ids outside 0..13 raise InvalidToken.
    """
    x, y = int(origin[0]), int(origin[1])
    strokes: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] | None = None
    moves = _MOVES
    for t in tokens:
        if DIRECTION_BASE <= t <= SE:
            dx, dy = moves[t]
            x += dx
            y += dy
            if current is not None:
                current.append((x, y))
        elif t == DOWN:
            if current is None:
                current = [(x, y)]
        elif t == UP:
            if current is not None:
                strokes.append(current)
                current = None
        elif 0 <= t <= UNKNOWN:
            continue
        else:
            raise InvalidToken(f"token id {t} is not in the base alphabet")
    if current is not None:
        strokes.append(current)
    return IntegerInk(strokes)


def scribe_decode_pipeline(tokens, q: QuantizationParams, post=None, origin=(0, 0)) -> RawInk:
    """Token sequence back to drawable ink: detokenize, dequantize, smooth.

    `post` defaults to the standard reconstruction settings (window 7,
    polyorder 3, keep every 2nd point); pass a PostprocessParams to change
    them.
    """
    from .smoothing import PostprocessParams, postprocess_ink

    grid = scribe_detokenize(tokens, origin)
    raw = dequantize(grid, q)
    return postprocess_ink(raw, post if post is not None else PostprocessParams())
