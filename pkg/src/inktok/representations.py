"""Uniform plumbing from ink to token ids and back, per representation.

Four representations are addressable by tag:

  scribe  direction/pen tokens; base ids are fixed by the scribe module
  abs     absolute coordinate tokens plus UP
  rel     offset tokens plus UP
  text    digit characters, minus sign, separator, UP

Every representation gets a base Vocab (the coordinate ones built from a
corpus), a symbols view (printable token names, used in token files), and
id-level encode/decode against a vocabulary. Symbol names never contain
whitespace: the text separator character is named SP.
"""

from __future__ import annotations

import re

from . import baselines, scribe
from .bpe import (
    END_ID,
    PAD_ID,
    REPRESENTATIONS,
    SPECIAL_NAMES,
    START_ID,
    UNKNOWN_ID,
    Vocab,
    bpe_train,
)
from .errors import ConfigMismatch, InvalidParams, InvalidToken
from .ink import IntegerInk

UP_NAME = "UP"
SP_NAME = "SP"

_COORD_RE = re.compile(r"^\((-?\d+),(-?\d+)\)$")

_TEXT_CONTENT = tuple("0123456789") + ("-", SP_NAME, UP_NAME)


def coord_name(pair) -> str:
    return f"({int(pair[0])},{int(pair[1])})"


def parse_coord_name(name: str):
    m = _COORD_RE.match(name)
    if not m:
        return None
    return (int(m.group(1)), int(m.group(2)))


# ---------------------------------------------------------------------------
# base vocabularies


def base_vocab(representation: str, delta: float, coordinates=None) -> Vocab:
    """Base vocabulary for a representation.

    abs and rel need `coordinates`: the coordinate pairs (absolute points or
    offsets) the vocabulary should cover, typically collected from a training
    corpus. scribe and text have fixed alphabets and ignore it.
    """
    if representation == "scribe":
        tokens = scribe.TOKEN_NAMES
        mergeable = range(scribe.E, scribe.SE + 1)
    elif representation == "text":
        tokens = SPECIAL_NAMES + _TEXT_CONTENT
        mergeable = range(4, 4 + len(_TEXT_CONTENT) - 1)  # everything but UP
    elif representation in ("abs", "rel"):
        if coordinates is None:
            raise InvalidParams(f"{representation} base vocabulary needs coordinates")
        coords = sorted({(int(x), int(y)) for x, y in coordinates})
        tokens = SPECIAL_NAMES + (UP_NAME,) + tuple(coord_name(c) for c in coords)
        mergeable = range(5, 5 + len(coords))  # UP at id 4 stays unmergeable
    else:
        raise InvalidParams(f"unknown representation {representation!r}")
    return Vocab(representation, delta, tokens, mergeable)


def corpus_coordinates(representation: str, inks) -> set[tuple[int, int]]:
    """Collect the coordinate alphabet a corpus needs (abs points, rel offsets)."""
    coords: set[tuple[int, int]] = set()
    if representation == "abs":
        for ink in inks:
            for stroke in ink.strokes:
                coords.update((p[0], p[1]) for p in stroke.tolist())
    elif representation == "rel":
        for ink in inks:
            for tok in baselines.rel_encode(ink):
                if isinstance(tok, tuple):
                    coords.add(tok)
    else:
        raise InvalidParams(f"{representation!r} has a fixed alphabet")
    return coords


# ---------------------------------------------------------------------------
# symbols and ids


def ink_to_symbols(representation: str, ink: IntegerInk) -> list[str]:
    """Printable base token names for an ink, independent of any vocabulary."""
    if representation == "scribe":
        names = scribe.TOKEN_NAMES
        return [names[t] for t in scribe.scribe_tokenize(ink)]
    if representation == "abs":
        return [t if isinstance(t, str) else coord_name(t) for t in baselines.abs_encode(ink)]
    if representation == "rel":
        return [t if isinstance(t, str) else coord_name(t) for t in baselines.rel_encode(ink)]
    if representation == "text":
        return [SP_NAME if t == " " else t for t in baselines.text_encode(ink)]
    raise InvalidParams(f"unknown representation {representation!r}")


def ink_to_base_ids(representation: str, ink: IntegerInk, vocab: Vocab) -> list[int]:
    """Base ids under a vocabulary; out-of-vocabulary symbols become UNKNOWN."""
    if vocab.representation != representation:
        raise ConfigMismatch(
            f"vocabulary is for {vocab.representation!r}, not {representation!r}"
        )
    if representation == "scribe":
        return scribe.scribe_tokenize(ink)  # ids are the vocabulary layout
    lookup = vocab.id_or_unknown
    return [lookup(s) for s in ink_to_symbols(representation, ink)]


def _structured(vocab: Vocab):
    """Map each base id to the token the baseline decoders understand."""
    out = []
    for i, name in enumerate(vocab.base_tokens):
        if i == UNKNOWN_ID:
            out.append(baselines.UNKNOWN_TOKEN)
        elif i in (PAD_ID, START_ID, END_ID):
            out.append(None)
        elif name == UP_NAME:
            out.append(baselines.UP_TOKEN)
        elif name == SP_NAME:
            out.append(" ")
        else:
            parsed = parse_coord_name(name)
            out.append(parsed if parsed is not None else name)
    return out


def base_ids_to_ink(
    representation: str, ids, vocab: Vocab, origin: tuple[int, int] = (0, 0)
) -> IntegerInk:
    """Decode base ids back to integer ink. PAD, START and END are skipped."""
    if vocab.representation != representation:
        raise ConfigMismatch(
            f"vocabulary is for {vocab.representation!r}, not {representation!r}"
        )
    if representation == "scribe":
        return scribe.scribe_detokenize(ids, origin)
    table = _structured(vocab)
    size = vocab.base_size
    tokens = []
    for t in ids:
        t = int(t)
        if not (0 <= t < size):
            raise InvalidToken(f"id {t} is not a base id of this vocabulary")
        tok = table[t]
        if tok is not None:
            tokens.append(tok)
    if representation == "abs":
        return baselines.abs_decode(tokens)
    if representation == "rel":
        return baselines.rel_decode(tokens, origin)
    return baselines.text_decode(tokens, origin)


def symbols_to_ink(
    representation: str, symbols, origin: tuple[int, int] = (0, 0)
) -> IntegerInk:
    """Decode printable token names directly, without a vocabulary.

    Special names (PAD, START, END) are skipped; UNKNOWN keeps its
    representation-specific meaning. Anything unrecognized raises
    InvalidToken.
    """
    skip = set(SPECIAL_NAMES[:3])
    if representation == "scribe":
        ids = []
        name_to_id = {n: i for i, n in enumerate(scribe.TOKEN_NAMES)}
        for s in symbols:
            try:
                ids.append(name_to_id[s])
            except KeyError:
                raise InvalidToken(f"{s!r} is not a scribe token name") from None
        return scribe.scribe_detokenize(ids, origin)
    if representation in ("abs", "rel"):
        tokens = []
        for s in symbols:
            if s in skip:
                continue
            if s in (UP_NAME, baselines.UNKNOWN_TOKEN):
                tokens.append(s)
                continue
            parsed = parse_coord_name(s)
            if parsed is None:
                raise InvalidToken(f"{s!r} is not a coordinate token name")
            tokens.append(parsed)
        if representation == "abs":
            return baselines.abs_decode(tokens)
        return baselines.rel_decode(tokens, origin)
    if representation == "text":
        alphabet = set(_TEXT_CONTENT)
        tokens = []
        for s in symbols:
            if s in skip or s == baselines.UNKNOWN_TOKEN:
                continue
            if s not in alphabet:
                raise InvalidToken(f"{s!r} is not a text token name")
            tokens.append(" " if s == SP_NAME else s)
        return baselines.text_decode(tokens, origin)
    raise InvalidParams(f"unknown representation {representation!r}")


# ---------------------------------------------------------------------------
# corpus-level training


def train_vocab(representation: str, inks, delta: float, target_size: int) -> Vocab:
    """Build the base vocabulary for a corpus of IntegerInk and learn merges."""
    if representation in ("abs", "rel"):
        base = base_vocab(representation, delta, corpus_coordinates(representation, inks))
    else:
        base = base_vocab(representation, delta)
    corpus = [ink_to_base_ids(representation, ink, base) for ink in inks]
    return bpe_train(corpus, target_size, base)
