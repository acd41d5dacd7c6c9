"""Constrained byte-pair encoding over token ids.

A Vocab is a base alphabet plus an ordered list of merge rules. Merges are
constrained: only ids in the vocabulary's mergeable set may ever appear in a
rule, and pen tokens (UP, DOWN), UNKNOWN and the specials (PAD, START, END)
are never mergeable. Pair counting respects the same wall, so a merged token
never spans a pen transition and decoding any id sequence keeps the pen
structure of its base expansion intact.

Training is plain greedy BPE: repeatedly take the most frequent adjacent
mergeable pair, breaking frequency ties toward the smallest (left id,
right id), and record it as a rule until the vocabulary reaches its target
size or no pair occurs at least twice. Encoding applies the rules in learned
order, each rule left to right; because every new adjacency contains the
token the current rule just created, later rules are the only ones that
could consume it, so one increasing pass over rule ranks is exact.

Ids are laid out as: specials 0..3, then the representation's content
tokens, then one id per merge rule in rule order.
"""

from __future__ import annotations

import hashlib
import heapq
import json

import numpy as np

from .errors import BudgetExhausted, InvalidParams, InvalidToken, ParseError

PAD_ID = 0
START_ID = 1
END_ID = 2
UNKNOWN_ID = 3

SPECIAL_NAMES = ("PAD", "START", "END", "UNKNOWN")
_NEVER_MERGEABLE_NAMES = frozenset(SPECIAL_NAMES) | {"UP", "DOWN"}

REPRESENTATIONS = ("scribe", "abs", "rel", "text")

VOCAB_FORMAT = "inktok-vocab/1"


class Vocab:
    """Immutable token vocabulary: base alphabet + ordered merge rules."""

    __slots__ = (
        "representation",
        "delta",
        "base_tokens",
        "mergeable_base",
        "merges",
        "base_size",
        "size",
        "_token_to_id",
        "_expansions",
        "_names",
    )

    def __init__(self, representation, delta, base_tokens, mergeable_base, merges=()):
        if representation not in REPRESENTATIONS:
            raise InvalidParams(f"unknown representation {representation!r}")
        delta = float(delta)
        if not delta > 0.0:
            raise InvalidParams(f"delta must be positive, got {delta!r}")
        base_tokens = tuple(str(t) for t in base_tokens)
        if len(base_tokens) < 4 or base_tokens[:4] != SPECIAL_NAMES:
            raise InvalidParams("base tokens must start with PAD, START, END, UNKNOWN")
        if len(set(base_tokens)) != len(base_tokens):
            raise InvalidParams("base tokens must be unique")
        base_size = len(base_tokens)

        mergeable = frozenset(int(i) for i in mergeable_base)
        for i in mergeable:
            if not (0 <= i < base_size):
                raise InvalidParams(f"mergeable id {i} is outside the base alphabet")
            if base_tokens[i] in _NEVER_MERGEABLE_NAMES:
                raise InvalidParams(f"token {base_tokens[i]!r} (id {i}) can never be mergeable")

        rules = []
        for r, pair in enumerate(merges):
            try:
                left, right = int(pair[0]), int(pair[1])
            except (TypeError, ValueError, IndexError):
                raise InvalidParams(f"merge {r}: rules are (left, right) id pairs, got {pair!r}") from None
            limit = base_size + r
            for side in (left, right):
                if not (0 <= side < limit):
                    raise InvalidParams(f"merge {r}: id {side} not defined at that point")
                if side < base_size and side not in mergeable:
                    raise InvalidParams(
                        f"merge {r}: id {side} ({base_tokens[side]!r}) is not mergeable"
                    )
            rules.append((left, right))

        self.representation = representation
        self.delta = delta
        self.base_tokens = base_tokens
        self.mergeable_base = mergeable
        self.merges = tuple(rules)
        self.base_size = base_size
        self.size = base_size + len(rules)
        self._token_to_id = {t: i for i, t in enumerate(base_tokens)}
        self._expansions = None
        self._names = None

    # -- lookups ------------------------------------------------------------

    def id_of(self, token: str) -> int:
        """Id of a base token name; InvalidToken if absent."""
        try:
            return self._token_to_id[token]
        except KeyError:
            raise InvalidToken(f"token {token!r} is not in the base alphabet") from None

    def id_or_unknown(self, token: str) -> int:
        return self._token_to_id.get(token, UNKNOWN_ID)

    def __contains__(self, token: str) -> bool:
        return token in self._token_to_id

    def name_of(self, token_id: int) -> str:
        """Printable name; merged ids concatenate their parts."""
        if not (0 <= token_id < self.size):
            raise InvalidToken(f"token id {token_id} is outside the vocabulary")
        if self._names is None:
            names = list(self.base_tokens)
            for left, right in self.merges:
                names.append(names[left] + names[right])
            self._names = names
        return self._names[token_id]

    def expansions(self) -> tuple[tuple[int, ...], ...]:
        """Base-id expansion for every id (base ids expand to themselves)."""
        if self._expansions is None:
            exp = [(i,) for i in range(self.base_size)]
            for left, right in self.merges:
                exp.append(exp[left] + exp[right])
            self._expansions = tuple(exp)
        return self._expansions

    def __eq__(self, other):
        if not isinstance(other, Vocab):
            return NotImplemented
        return (
            self.representation == other.representation
            and self.delta == other.delta
            and self.base_tokens == other.base_tokens
            and self.mergeable_base == other.mergeable_base
            and self.merges == other.merges
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"Vocab({self.representation!r}, delta={self.delta}, "
            f"base={self.base_size}, merges={len(self.merges)})"
        )


# ---------------------------------------------------------------------------
# training


def bpe_train(corpus, target_size: int, base: Vocab) -> Vocab:
    """Learn merges on a corpus of base-id sequences until `target_size` ids.

    The corpus is a list of sequences already encoded at the base level under
    `base` (which must carry no merges yet). Raises BudgetExhausted when the
    budget cannot even hold the base alphabet; stops early, without error,
    when no adjacent pair occurs twice.
    """
    if base.merges:
        raise InvalidParams("training starts from a base vocabulary without merges")
    target_size = int(target_size)
    if target_size < base.base_size:
        raise BudgetExhausted(
            f"target size {target_size} cannot hold the {base.base_size}-token base alphabet"
        )

    base_size = base.base_size
    mergeable = set(base.mergeable_base)

    # One arena for the whole corpus, sequences fenced off by PAD (never
    # mergeable), so pair counting cannot cross sequence boundaries.
    tok: list[int] = []
    for seq in corpus:
        if tok:
            tok.append(PAD_ID)
        for t in seq:
            t = int(t)
            if not (0 <= t < base_size):
                raise InvalidToken(f"corpus id {t} is not a base id")
            tok.append(t)
    n = len(tok)
    nxt = list(range(1, n + 1))
    prv = list(range(-1, n))

    counts: dict[tuple[int, int], int] = {}
    positions: dict[tuple[int, int], list[int]] = {}
    for i in range(n - 1):
        a, b = tok[i], tok[i + 1]
        if a in mergeable and b in mergeable:
            pair = (a, b)
            counts[pair] = counts.get(pair, 0) + 1
            positions.setdefault(pair, []).append(i)

    heap = [(-c, pair[0], pair[1]) for pair, c in counts.items() if c >= 2]
    heapq.heapify(heap)

    merges: list[tuple[int, int]] = []
    size = base_size

    def bump(pair: tuple[int, int], at: int) -> None:
        c = counts.get(pair, 0) + 1
        counts[pair] = c
        positions.setdefault(pair, []).append(at)
        if c >= 2:
            heapq.heappush(heap, (-c, pair[0], pair[1]))

    def drop(pair: tuple[int, int]) -> None:
        c = counts.get(pair)
        if c:
            c -= 1
            counts[pair] = c
            if c >= 2:
                heapq.heappush(heap, (-c, pair[0], pair[1]))

    while size < target_size and heap:
        neg, left, right = heapq.heappop(heap)
        pair = (left, right)
        if counts.get(pair, 0) != -neg:
            continue  # stale heap entry
        new_id = size
        mergeable.add(new_id)  # adjacencies formed during this rule count too
        plist = positions.pop(pair, [])
        plist.sort()
        for p in plist:
            if tok[p] != left:
                continue
            q = nxt[p]
            if q >= n or tok[q] != right:
                continue
            pp = prv[p]
            nq = nxt[q]
            if pp >= 0 and tok[pp] in mergeable:
                drop((tok[pp], left))
            drop(pair)
            if nq < n and tok[nq] in mergeable:
                drop((right, tok[nq]))
            tok[p] = new_id
            tok[q] = -1
            nxt[p] = nq
            if nq < n:
                prv[nq] = p
            if pp >= 0 and tok[pp] in mergeable:
                bump((tok[pp], new_id), pp)
            if nq < n and tok[nq] in mergeable:
                bump((new_id, tok[nq]), p)
        counts.pop(pair, None)
        merges.append(pair)
        size += 1

    return Vocab(base.representation, base.delta, base.base_tokens, base.mergeable_base, merges)


# ---------------------------------------------------------------------------
# encode / decode


def bpe_encode(ids, vocab: Vocab) -> list[int]:
    """Apply the vocabulary's merges to a base-id sequence.

    Rules run in learned order, each left to right. Input must be base ids;
    anything else raises InvalidToken.
    """
    base_size = vocab.base_size
    try:
        arr = np.asarray(ids, dtype=np.int64)
    except (TypeError, ValueError, OverflowError) as exc:
        raise InvalidToken(f"bpe_encode takes base ids: {exc}") from None
    if arr.ndim != 1:
        raise InvalidToken("bpe_encode takes a flat sequence of base ids")
    if arr.size and (arr.min() < 0 or arr.max() >= base_size):
        bad = arr[(arr < 0) | (arr >= base_size)][0]
        raise InvalidToken(f"bpe_encode takes base ids; {bad} is not one")
    tok = arr.tolist()
    merges = vocab.merges
    if not merges or len(tok) < 2:
        return tok

    # Pair keys pack as left*size+right; a flat table maps key -> rank (-1
    # when the pair is not a rule), which is cheaper than dict probes both
    # for the vectorized seed scan and inside the merge loop.
    size = vocab.size
    table = np.full(size * size, -1, dtype=np.int64)
    for r in range(len(merges) - 1, -1, -1):
        left, right = merges[r]
        table[left * size + right] = r
    rank_lut = table.tolist()

    n = len(tok)
    nxt = list(range(1, n + 1))
    prv = list(range(-1, n))

    # Seed occurrences: rank each adjacent pair, group hit positions by rank.
    ranks = table[arr[:-1] * size + arr[1:]]
    hits = np.nonzero(ranks >= 0)[0]
    order = np.argsort(ranks[hits], kind="stable")
    grouped = hits[order]
    group_ranks = ranks[grouped]
    bounds = np.nonzero(np.diff(group_ranks))[0] + 1
    occ: dict[int, list[int]] = {}
    start = 0
    for stop in [*bounds.tolist(), len(grouped)]:
        if stop > start:
            occ[int(group_ranks[start])] = grouped[start:stop].tolist()
        start = stop

    heap = list(occ.keys())
    heapq.heapify(heap)
    heappush = heapq.heappush
    heappop = heapq.heappop

    while heap:
        r = heappop(heap)
        plist = occ.pop(r, None)
        if plist is None:
            continue
        left, right = merges[r]
        new_id = base_size + r
        plist.sort()
        for p in plist:
            if tok[p] != left:
                continue
            q = nxt[p]
            if q >= n or tok[q] != right:
                continue
            nq = nxt[q]
            tok[p] = new_id
            tok[q] = -1
            nxt[p] = nq
            if nq < n:
                prv[nq] = p
                r2 = rank_lut[new_id * size + tok[nq]]
                if r2 >= 0:
                    if r2 in occ:
                        occ[r2].append(p)
                    else:
                        occ[r2] = [p]
                        heappush(heap, r2)
            pp = prv[p]
            if pp >= 0 and tok[pp] >= 0:
                r2 = rank_lut[tok[pp] * size + new_id]
                if r2 >= 0:
                    if r2 in occ:
                        occ[r2].append(pp)
                    else:
                        occ[r2] = [pp]
                        heappush(heap, r2)
    return [t for t in tok if t >= 0]


def bpe_decode(ids, vocab: Vocab) -> list[int]:
    """Expand every id to base ids. Total for any ids the vocabulary defines."""
    exp = vocab.expansions()
    size = vocab.size
    base_size = vocab.base_size
    out: list[int] = []
    for t in ids:
        t = int(t)
        if 0 <= t < base_size:
            out.append(t)
        elif t < size and t >= 0:
            out.extend(exp[t])
        else:
            raise InvalidToken(f"token id {t} is outside the vocabulary")
    return out


# ---------------------------------------------------------------------------
# files


def _vocab_document(vocab: Vocab) -> dict:
    return {
        "format": VOCAB_FORMAT,
        "representation": vocab.representation,
        "delta": vocab.delta,
        "base_tokens": list(vocab.base_tokens),
        "specials": {name: i for i, name in enumerate(SPECIAL_NAMES)},
        "mergeable": sorted(vocab.mergeable_base),
        "merges": [list(pair) for pair in vocab.merges],
    }


def vocab_to_bytes(vocab: Vocab) -> bytes:
    """Canonical file bytes; identical vocabularies serialize identically."""
    return (json.dumps(_vocab_document(vocab), indent=2, sort_keys=True) + "\n").encode("utf-8")


def vocab_hash(vocab: Vocab) -> str:
    """First 12 hex chars of the sha256 of the canonical file bytes."""
    return hashlib.sha256(vocab_to_bytes(vocab)).hexdigest()[:12]


def vocab_save(vocab: Vocab, destination) -> None:
    data = vocab_to_bytes(vocab)
    if hasattr(destination, "write"):
        written = destination.write(data)
        del written
    else:
        with open(destination, "wb") as fh:
            fh.write(data)


def vocab_load(source) -> Vocab:
    """Read a vocabulary file, validating structure and merge constraints."""
    if hasattr(source, "read"):
        raw = source.read()
        label = getattr(source, "name", "<stream>")
    else:
        label = str(source)
        with open(source, "rb") as fh:
            raw = fh.read()
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{label}: not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{label}: expected a JSON object at top level")
    if doc.get("format") != VOCAB_FORMAT:
        raise ParseError(f"{label}: field 'format' must be {VOCAB_FORMAT!r}, got {doc.get('format')!r}")
    for field in ("representation", "delta", "base_tokens", "merges"):
        if field not in doc:
            raise ParseError(f"{label}: missing field {field!r}")
    mergeable = doc.get("mergeable")
    if not isinstance(mergeable, list):
        raise ParseError(f"{label}: field 'mergeable' must be a list of base ids")
    try:
        return Vocab(
            doc["representation"],
            doc["delta"],
            doc["base_tokens"],
            mergeable,
            doc["merges"],
        )
    except (InvalidParams, TypeError, ValueError) as exc:
        raise ParseError(f"{label}: {exc}") from None
