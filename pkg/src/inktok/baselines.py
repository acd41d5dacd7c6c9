"""Baseline ink representations: offset vectors, coordinate tokens, digit text.

Five codecs over IntegerInk, each with an encode/decode pair:

  point3  (dx, dy, p) rows, one per transition; p=1 when the destination
          point closes its stroke.
  point5  (dx, dy, p1, p2, p3) rows; p1 marks a within-stroke move, p2 an
          in-air move, p3 replaces both on the final row of the ink.
  abs     absolute (x, y) coordinate tokens with an UP token after every
          stroke.
  rel     offset (dx, dy) tokens with UP after every stroke; the move
          following an UP is the pen-up travel to the next stroke's start.
  text    the rel stream spelled out as digit characters, one character per
          token, numbers separated by a space token, UP in place of the
          separator at stroke ends.

All decoders start from an explicit origin (the first point of the original
ink) and are total: any well-typed token sequence decodes to some ink.

Two structural gaps are inherent, not bugs: point3 has no slot for a pen
lift before the first transition, so a one-point first stroke does not
survive a round trip; point5's p3 masks p1/p2 on the final row, so a
one-point last stroke loses its pen-up flag. The other three codecs round-
trip every ink.

abs and rel accept an optional vocabulary (any container of (x, y) tuples);
tokens outside it encode as UNKNOWN. abs_decode skips UNKNOWN points,
rel_decode and text-level consumers treat UNKNOWN as a zero displacement.
"""

from __future__ import annotations

from .errors import InvalidInk, InvalidToken
from .ink import IntegerInk

UP_TOKEN = "UP"
UNKNOWN_TOKEN = "UNKNOWN"

_TEXT_NUMBER_CHARS = frozenset("0123456789-")


def _flat_points(ink: IntegerInk) -> tuple[list[tuple[int, int]], list[int]]:
    """All points in drawing order plus the stroke length prefix structure."""
    points: list[tuple[int, int]] = []
    lengths: list[int] = []
    for stroke in ink.strokes:
        pts = stroke.tolist()
        lengths.append(len(pts))
        points.extend((p[0], p[1]) for p in pts)
    return points, lengths


# ---------------------------------------------------------------------------
# point3 / point5


def point3_encode(ink: IntegerInk) -> list[tuple[int, int, int]]:
    if len(ink) == 0:
        raise InvalidInk("point3_encode needs at least one stroke")
    rows: list[tuple[int, int, int]] = []
    prev = None
    for stroke in ink.strokes:
        pts = stroke.tolist()
        last = len(pts) - 1
        for i, (x, y) in enumerate(pts):
            if prev is not None:
                rows.append((x - prev[0], y - prev[1], 1 if i == last else 0))
            prev = (x, y)
    return rows


def point3_decode(rows, origin: tuple[int, int] = (0, 0)) -> IntegerInk:
    """Rebuild ink from transition rows. The origin is always a drawn point."""
    x, y = int(origin[0]), int(origin[1])
    strokes: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] | None = [(x, y)]
    for row in rows:
        try:
            dx, dy, p = row
        except (TypeError, ValueError):
            raise InvalidToken(f"point3 rows are (dx, dy, p) triples, got {row!r}") from None
        x += dx
        y += dy
        if current is None:
            current = [(x, y)]
        else:
            current.append((x, y))
        if p:
            strokes.append(current)
            current = None
    if current is not None:
        strokes.append(current)
    return IntegerInk(strokes)


def point5_encode(ink: IntegerInk) -> list[tuple[int, int, int, int, int]]:
    if len(ink) == 0:
        raise InvalidInk("point5_encode needs at least one stroke")
    rows: list[tuple[int, int, int, int, int]] = []
    prev = None
    for stroke in ink.strokes:
        pts = stroke.tolist()
        for i, (x, y) in enumerate(pts):
            if prev is not None:
                in_air = i == 0
                rows.append((x - prev[0], y - prev[1], 0 if in_air else 1, 1 if in_air else 0, 0))
            prev = (x, y)
    if rows:
        dx, dy, _, _, _ = rows[-1]
        rows[-1] = (dx, dy, 0, 0, 1)
    return rows


def point5_decode(rows, origin: tuple[int, int] = (0, 0)) -> IntegerInk:
    """Rebuild ink from flagged rows; p3 rows are treated as within-stroke."""
    x, y = int(origin[0]), int(origin[1])
    strokes: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] | None = [(x, y)]
    for row in rows:
        try:
            dx, dy, p1, p2, p3 = row
        except (TypeError, ValueError):
            raise InvalidToken(f"point5 rows are (dx, dy, p1, p2, p3) tuples, got {row!r}") from None
        x += dx
        y += dy
        if p2 and not p3:
            if current is not None:
                strokes.append(current)
            current = [(x, y)]
        elif current is None:
            current = [(x, y)]
        else:
            current.append((x, y))
    if current is not None:
        strokes.append(current)
    return IntegerInk(strokes)


# ---------------------------------------------------------------------------
# abs / rel coordinate tokens


def abs_encode(ink: IntegerInk, vocabulary=None):
    """Absolute coordinate tokens, UP after each stroke.

    With a vocabulary, coordinates outside it become UNKNOWN.
    """
    tokens: list = []
    for stroke in ink.strokes:
        for x, y in stroke.tolist():
            pt = (x, y)
            if vocabulary is not None and pt not in vocabulary:
                tokens.append(UNKNOWN_TOKEN)
            else:
                tokens.append(pt)
        tokens.append(UP_TOKEN)
    return tokens


def abs_decode(tokens) -> IntegerInk:
    """Rebuild ink; stroke gaps come solely from UP placement, UNKNOWN is skipped."""
    strokes: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] = []
    for tok in tokens:
        if tok == UP_TOKEN:
            if current:
                strokes.append(current)
                current = []
        elif tok == UNKNOWN_TOKEN:
            continue
        else:
            try:
                x, y = tok
            except (TypeError, ValueError):
                raise InvalidToken(f"abs tokens are (x, y) pairs, UP or UNKNOWN, got {tok!r}") from None
            current.append((int(x), int(y)))
    if current:
        strokes.append(current)
    return IntegerInk(strokes)


def rel_encode(ink: IntegerInk, vocabulary=None):
    """Offset tokens with UP markers; offsets outside the vocabulary become UNKNOWN."""
    tokens: list = []
    prev = None
    for stroke in ink.strokes:
        for x, y in stroke.tolist():
            if prev is not None:
                off = (x - prev[0], y - prev[1])
                if vocabulary is not None and off not in vocabulary:
                    tokens.append(UNKNOWN_TOKEN)
                else:
                    tokens.append(off)
            prev = (x, y)
        tokens.append(UP_TOKEN)
    return tokens


def rel_decode(tokens, origin: tuple[int, int] = (0, 0)) -> IntegerInk:
    """Rebuild ink from offset tokens.

    For a non-empty sequence the pen starts down at the origin (the origin is
    a drawn point); the first offset after each UP is pen-up travel that
    opens the next stroke. UNKNOWN moves nothing, an UP with no open stroke
    does nothing, and an unclosed stroke is closed at the end.
    """
    tokens = list(tokens)
    if not tokens:
        return IntegerInk([])
    x, y = int(origin[0]), int(origin[1])
    strokes: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] | None = [(x, y)]
    for tok in tokens:
        if tok == UP_TOKEN:
            if current is not None:
                strokes.append(current)
                current = None
        else:
            if tok == UNKNOWN_TOKEN:
                dx = dy = 0
            else:
                try:
                    dx, dy = tok
                except (TypeError, ValueError):
                    raise InvalidToken(
                        f"rel tokens are (dx, dy) pairs, UP or UNKNOWN, got {tok!r}"
                    ) from None
            x += int(dx)
            y += int(dy)
            if current is None:
                current = [(x, y)]
            else:
                current.append((x, y))
    if current is not None:
        strokes.append(current)
    return IntegerInk(strokes)


# ---------------------------------------------------------------------------
# text


def text_encode(ink: IntegerInk) -> list[str]:
    """Spell the rel stream as characters.

    Each offset contributes the decimal digits of dx, a space, the digits of
    dy; numbers are space-separated except where a stroke ends, where UP
    stands in for the separator.
    """
    tokens: list[str] = []
    prev = None
    pending_sep = False
    for stroke in ink.strokes:
        for x, y in stroke.tolist():
            if prev is not None:
                for n in (x - prev[0], y - prev[1]):
                    if pending_sep:
                        tokens.append(" ")
                    tokens.extend(str(n))
                    pending_sep = True
            prev = (x, y)
        tokens.append(UP_TOKEN)
        pending_sep = False
    return tokens


def text_decode(tokens, origin: tuple[int, int] = (0, 0)) -> IntegerInk:
    """Parse the character stream back into ink.

    Numbers are maximal runs of digit or '-' characters; runs that fail to
    parse as an integer are dropped, a span with an odd number count drops
    its trailing number, and empty spans are skipped. Spans are separated by
    UP; the pen starts down at the origin exactly as in rel_decode.
    """
    tokens = list(tokens)
    if not tokens:
        return IntegerInk([])
    x, y = int(origin[0]), int(origin[1])
    strokes: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] | None = [(x, y)]

    def apply_span(numbers: list[int]) -> None:
        nonlocal x, y, current
        if len(numbers) % 2:
            numbers = numbers[:-1]
        for i in range(0, len(numbers), 2):
            x += numbers[i]
            y += numbers[i + 1]
            if current is None:
                current = [(x, y)]
            else:
                current.append((x, y))

    numbers: list[int] = []
    run: list[str] = []

    def close_run() -> None:
        if run:
            try:
                numbers.append(int("".join(run)))
            except ValueError:
                pass
            run.clear()

    for tok in tokens:
        if tok == UP_TOKEN:
            close_run()
            apply_span(numbers)
            numbers = []
            if current is not None:
                strokes.append(current)
                current = None
        elif tok in _TEXT_NUMBER_CHARS:
            run.append(tok)
        else:
            close_run()
    close_run()
    apply_span(numbers)
    if current is not None:
        strokes.append(current)
    return IntegerInk(strokes)
