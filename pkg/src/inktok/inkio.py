"""File formats: ink documents, token files, IAM-style XML import, SVG.

Ink document (JSON):
    {"format": "inktok-ink/1", "strokes": [[[x, y], ...], ...],
     "delta": 8.0, "origin": [0, 0]}
delta and origin are optional provenance carried along the pipeline.

Token file (text): one header line, then one token sequence per line,
whitespace separated. Base-level sequences use token names, encoded
sequences use integer ids.
    #inktok-tokens v1 rep=scribe delta=8.0 vocab=none origin=0,0

Import understands whiteboard-capture XML: any <Stroke> element holding
<Point x=".." y=".."> children; y is negated so the ink is y-up. Rendering
writes standalone SVG, optionally coloring the rasterized path by BPE token.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .bpe import Vocab, bpe_decode, vocab_hash
from .errors import ConfigMismatch, EmptyInk, InvalidParams, ParseError
from .ink import IntegerInk, QuantizationParams, RawInk, quantize
from .scribe import DOWN, SE, UP, DIRECTION_BASE, scribe_tokenize
from .scribe import _MOVES as _SCRIBE_MOVES

INK_FORMAT = "inktok-ink/1"
TOKEN_HEADER_PREFIX = "#inktok-tokens v1"


def _read_text(source) -> tuple[str, str]:
    if hasattr(source, "read"):
        raw = source.read()
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        return raw, getattr(source, "name", "<stream>")
    with open(source, "r", encoding="utf-8") as fh:
        return fh.read(), str(source)


def _write_text(destination, data: str) -> None:
    if hasattr(destination, "write"):
        destination.write(data)
    else:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)


# ---------------------------------------------------------------------------
# ink documents


@dataclass(frozen=True)
class InkDocument:
    ink: RawInk
    delta: float | None = None
    origin: tuple[int, int] | None = None


def write_ink(ink, destination, *, delta=None, origin=None) -> None:
    """Serialize RawInk or IntegerInk; integer coordinates stay integers."""
    doc = {"format": INK_FORMAT, "strokes": ink.to_lists()}
    if delta is not None:
        doc["delta"] = float(delta)
    if origin is not None:
        doc["origin"] = [int(origin[0]), int(origin[1])]
    _write_text(destination, json.dumps(doc, indent=2, sort_keys=True) + "\n")


def read_ink_document(source) -> InkDocument:
    raw, label = _read_text(source)
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{label}: not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{label}: expected a JSON object at top level")
    if doc.get("format") != INK_FORMAT:
        raise ParseError(f"{label}: field 'format' must be {INK_FORMAT!r}, got {doc.get('format')!r}")
    strokes = doc.get("strokes")
    if not isinstance(strokes, list):
        raise ParseError(f"{label}: field 'strokes' must be a list")
    for i, stroke in enumerate(strokes):
        if not isinstance(stroke, list) or not stroke:
            raise ParseError(f"{label}: strokes[{i}] must be a non-empty list of [x, y] points")
        for j, pt in enumerate(stroke):
            if (
                not isinstance(pt, list)
                or len(pt) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in pt)
            ):
                raise ParseError(f"{label}: strokes[{i}][{j}] must be a [x, y] number pair")
    delta = doc.get("delta")
    if delta is not None and (not isinstance(delta, (int, float)) or isinstance(delta, bool)):
        raise ParseError(f"{label}: field 'delta' must be a number")
    origin = doc.get("origin")
    if origin is not None:
        if not isinstance(origin, list) or len(origin) != 2:
            raise ParseError(f"{label}: field 'origin' must be a [x, y] pair")
        origin = (int(origin[0]), int(origin[1]))
    try:
        ink = RawInk(strokes)
    except Exception as exc:
        raise ParseError(f"{label}: {exc}") from None
    return InkDocument(ink, float(delta) if delta is not None else None, origin)


def read_ink(source) -> RawInk:
    return read_ink_document(source).ink


# ---------------------------------------------------------------------------
# token files


@dataclass(frozen=True)
class TokenFile:
    representation: str
    delta: float
    vocab_hash: str | None  # None when sequences are base-level names
    origin: tuple[int, int]
    sequences: tuple[tuple[str, ...], ...]  # raw whitespace-split atoms

    def id_sequences(self) -> list[list[int]]:
        """Parse atoms as integer ids (encoded files only)."""
        out = []
        for i, seq in enumerate(self.sequences):
            try:
                out.append([int(a) for a in seq])
            except ValueError as exc:
                raise ParseError(f"sequence {i}: {exc}") from None
        return out


def write_tokens(destination, sequences, *, representation, delta, origin=(0, 0), vocab: Vocab | None = None) -> None:
    """Write sequences of names (no vocab) or integer ids (vocab given)."""
    tag = vocab_hash(vocab) if vocab is not None else "none"
    lines = [
        f"{TOKEN_HEADER_PREFIX} rep={representation} delta={float(delta)!r} "
        f"vocab={tag} origin={int(origin[0])},{int(origin[1])}"
    ]
    for seq in sequences:
        atoms = [str(t) for t in seq]
        for a in atoms:
            if not a or any(c.isspace() for c in a):
                raise InvalidParams(f"token atom {a!r} cannot be written to a token file")
        lines.append(" ".join(atoms))
    _write_text(destination, "\n".join(lines) + "\n")


def read_tokens(source) -> TokenFile:
    raw, label = _read_text(source)
    lines = raw.splitlines()
    if not lines or not lines[0].startswith(TOKEN_HEADER_PREFIX):
        raise ParseError(f"{label}: missing token header line '{TOKEN_HEADER_PREFIX} ...'")
    fields = {}
    for part in lines[0][len(TOKEN_HEADER_PREFIX):].split():
        if "=" not in part:
            raise ParseError(f"{label}: bad header field {part!r}")
        key, value = part.split("=", 1)
        fields[key] = value
    for key in ("rep", "delta", "vocab", "origin"):
        if key not in fields:
            raise ParseError(f"{label}: header is missing {key}=...")
    try:
        delta = float(fields["delta"])
        ox, oy = fields["origin"].split(",")
        origin = (int(ox), int(oy))
    except ValueError as exc:
        raise ParseError(f"{label}: bad header value: {exc}") from None
    tag = fields["vocab"]
    sequences = tuple(tuple(line.split()) for line in lines[1:] if line.strip())
    return TokenFile(
        representation=fields["rep"],
        delta=delta,
        vocab_hash=None if tag == "none" else tag,
        origin=origin,
        sequences=sequences,
    )


# ---------------------------------------------------------------------------
# whiteboard XML import


def import_iamondb_detailed(source, *, strict: bool = True) -> tuple[RawInk, int]:
    """Parse whiteboard-capture XML. Returns (ink, skipped stroke count).

    Strict mode raises ParseError for any malformed point, naming the stroke,
    point and attribute. Lenient mode drops malformed strokes instead and
    counts them. Either way, no valid strokes left raises EmptyInk.
    """
    label = getattr(source, "name", None) or str(source)
    try:
        tree = ET.parse(source)
    except ET.ParseError as exc:
        raise ParseError(f"{label}: malformed XML: {exc}") from None
    strokes = []
    skipped = 0
    for si, stroke_el in enumerate(tree.getroot().iter("Stroke")):
        points = []
        bad = None
        for pi, point_el in enumerate(stroke_el.iter("Point")):
            x = point_el.get("x")
            y = point_el.get("y")
            if x is None or y is None:
                bad = f"stroke {si}, point {pi}: missing attribute {'x' if x is None else 'y'!r}"
                break
            try:
                points.append((float(x), -float(y)))
            except ValueError:
                which = "x"
                try:
                    float(x)
                    which = "y"
                except ValueError:
                    pass
                bad = f"stroke {si}, point {pi}: attribute {which!r} is not a number"
                break
        if bad is None and not points:
            bad = f"stroke {si}: no points"
        if bad is not None:
            if strict:
                raise ParseError(f"{label}: {bad}")
            skipped += 1
            continue
        strokes.append(points)
    if not strokes:
        raise EmptyInk(f"{label}: no usable strokes")
    return RawInk(strokes), skipped


def import_iamondb(source, *, strict: bool = True) -> RawInk:
    return import_iamondb_detailed(source, strict=strict)[0]


# ---------------------------------------------------------------------------
# SVG rendering


def _token_color(token_id: int) -> str:
    hue = (token_id * 137) % 360
    return f"hsl({hue},65%,42%)"


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def _svg_frame(ink_bounds, body: list[str]) -> str:
    (x0, y0, x1, y1) = ink_bounds
    pad = 0.05 * max(x1 - x0, y1 - y0, 1.0)
    w = (x1 - x0) + 2 * pad
    h = (y1 - y0) + 2 * pad
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_fmt(w)} {_fmt(h)}" width="{_fmt(w)}" height="{_fmt(h)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def render_svg(ink: RawInk, destination, *, tokens=None, vocab: Vocab | None = None, origin=(0, 0)) -> None:
    """Render ink as SVG polylines; with tokens, color the rasterized path.

    Token mode is defined for the scribe representation: `tokens` are ids
    under `vocab`; their base expansion must retrace exactly the rasterized
    path of the ink quantized at the vocabulary's delta, or ConfigMismatch
    is raised. Each merged token paints its unit moves in one color; pen-up
    travel is drawn faint and dashed.
    """
    if len(ink) == 0:
        raise EmptyInk("nothing to render")
    if tokens is None:
        xs = [c for s in ink.strokes for c in s[:, 0].tolist()]
        ys = [c for s in ink.strokes for c in s[:, 1].tolist()]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        pad = 0.05 * max(x1 - x0, y1 - y0, 1.0)
        body = []
        for stroke in ink.strokes:
            pts = " ".join(f"{_fmt(p[0] - x0 + pad)},{_fmt(y1 - p[1] + pad)}" for p in stroke.tolist())
            body.append(
                f'<polyline points="{pts}" fill="none" stroke="#1a1a1a" '
                'stroke-width="1.5" stroke-linecap="round" stroke-linejoin="round"/>'
            )
        _write_text(destination, _svg_frame((x0, y0, x1, y1), body))
        return

    if vocab is None:
        raise InvalidParams("token-colored rendering needs a vocabulary")
    if vocab.representation != "scribe":
        raise ConfigMismatch("token-colored rendering is defined for the scribe representation")
    grid = quantize(ink, QuantizationParams(vocab.delta))
    expected = scribe_tokenize(grid)
    base_ids = bpe_decode(tokens, vocab)
    if base_ids != expected:
        raise ConfigMismatch("tokens do not decode to the ink's rasterized path")
    if len(grid) == 0:
        raise EmptyInk("nothing to render")
    ox, oy = grid.strokes[0][0].tolist()
    del origin  # the ink itself fixes the replay origin

    # Replay the walk once to collect per-token colored segments.
    delta = vocab.delta
    segments: list[tuple[float, float, float, float, str, bool]] = []
    x, y = ox, oy
    pen_down = False
    expansions = vocab.expansions()
    for tid in tokens:
        color = _token_color(int(tid))
        for b in expansions[int(tid)]:
            if DIRECTION_BASE <= b <= SE:
                dx, dy = _SCRIBE_MOVES[b]
                nx, ny = x + dx, y + dy
                segments.append((x * delta, y * delta, nx * delta, ny * delta, color, pen_down))
                x, y = nx, ny
            elif b == DOWN:
                pen_down = True
            elif b == UP:
                pen_down = False
    xs = [v for s in segments for v in (s[0], s[2])] or [0.0]
    ys = [v for s in segments for v in (s[1], s[3])] or [0.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1.0)
    body = []
    for sx, sy, ex, ey, color, down in segments:
        attrs = f'stroke="{color}" stroke-width="{_fmt(delta * 0.6)}" stroke-linecap="round"'
        if not down:
            attrs += f' stroke-opacity="0.3" stroke-dasharray="{_fmt(delta * 0.5)}"'
        body.append(
            f'<line x1="{_fmt(sx - x0 + pad)}" y1="{_fmt(y1 - sy + pad)}" '
            f'x2="{_fmt(ex - x0 + pad)}" y2="{_fmt(y1 - ey + pad)}" {attrs}/>'
        )
    _write_text(destination, _svg_frame((x0, y0, x1, y1), body))
