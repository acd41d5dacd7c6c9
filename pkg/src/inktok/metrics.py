"""Corpus-level measurements: compression, points per token, OOV rate.

All three quantities are defined against the BPE-encoded sequence of each
sample:

  compression_ratio_base  base-level token count / encoded token count
  points_per_token        integer-ink point count / encoded token count
  oov_rate                UNKNOWN tokens / encoded token count

The sweep utility splits the corpus deterministically (every fourth sample
held out for evaluation, the rest for training), trains one vocabulary per
(representation, delta) pair on the training split, slices it to each
requested budget (greedy merges are a prefix-closed sequence, so the first
k merges of a big vocabulary are exactly the vocabulary trained with budget
base+k), and measures on the held-out split. Budgets too small for the base
alphabet produce an absent row, mirroring how such configurations are
reported blank rather than zero.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

from .bpe import UNKNOWN_ID, Vocab, bpe_encode
from .errors import ConfigMismatch, EmptyInk
from .ink import QuantizationParams, RawInk, quantize
from .representations import base_vocab, corpus_coordinates, ink_to_base_ids, train_vocab

REPORT_COLUMNS = (
    "representation",
    "delta",
    "vocab_size",
    "status",
    "sample_count",
    "mean_compression_ratio_base",
    "mean_points_per_token",
    "mean_oov_rate",
)


@dataclass(frozen=True)
class SampleStats:
    base_length: int
    encoded_length: int
    point_count: int
    unknown_count: int

    @property
    def compression_ratio_base(self) -> float:
        return self.base_length / self.encoded_length

    @property
    def points_per_token(self) -> float:
        return self.point_count / self.encoded_length

    @property
    def oov_rate(self) -> float:
        return self.unknown_count / self.encoded_length


@dataclass(frozen=True)
class CorpusStats:
    representation: str
    delta: float
    vocab_size: int
    per_sample: tuple[SampleStats, ...]

    @property
    def sample_count(self) -> int:
        return len(self.per_sample)

    @property
    def mean_compression_ratio_base(self) -> float:
        return sum(s.compression_ratio_base for s in self.per_sample) / len(self.per_sample)

    @property
    def mean_points_per_token(self) -> float:
        return sum(s.points_per_token for s in self.per_sample) / len(self.per_sample)

    @property
    def mean_oov_rate(self) -> float:
        return sum(s.oov_rate for s in self.per_sample) / len(self.per_sample)


def measure_sample(ink: RawInk, vocab: Vocab) -> SampleStats:
    """Quantize, base-encode and BPE-encode one ink under a vocabulary."""
    if len(ink) == 0:
        raise EmptyInk("cannot measure an ink with no strokes")
    grid = quantize(ink, QuantizationParams(vocab.delta))
    base_ids = ink_to_base_ids(vocab.representation, grid, vocab)
    encoded = bpe_encode(base_ids, vocab)
    return SampleStats(
        base_length=len(base_ids),
        encoded_length=len(encoded),
        point_count=grid.point_count,
        unknown_count=sum(1 for t in encoded if t == UNKNOWN_ID),
    )


def measure(corpus, representation: str, delta: float, vocab: Vocab) -> CorpusStats:
    """Per-sample and mean statistics for a corpus of RawInk.

    The representation tag and delta are stated explicitly so a stale or
    mismatched vocabulary is rejected up front instead of silently producing
    numbers under the wrong grid.
    """
    if vocab.representation != representation:
        raise ConfigMismatch(
            f"vocabulary was trained for {vocab.representation!r}, not {representation!r}"
        )
    if vocab.delta != float(delta):
        raise ConfigMismatch(f"vocabulary was trained at delta={vocab.delta}, not {delta}")
    corpus = list(corpus)
    if not corpus:
        raise EmptyInk("cannot measure an empty corpus")
    samples = tuple(measure_sample(ink, vocab) for ink in corpus)
    return CorpusStats(vocab.representation, vocab.delta, vocab.size, samples)


def split_corpus(corpus) -> tuple[list, list]:
    """Deterministic 3:1 train/eval split: every fourth sample is held out.

    Corpora too small to populate the held-out side fall back to evaluating
    on the training samples, so a one-sample corpus still yields a row.
    """
    corpus = list(corpus)
    train = [ink for i, ink in enumerate(corpus) if i % 4 != 3]
    held = [ink for i, ink in enumerate(corpus) if i % 4 == 3]
    if not held:
        held = list(train)
    return train, held


@dataclass(frozen=True)
class SweepEntry:
    representation: str
    delta: float
    vocab_size: int
    status: str  # "present" or "absent"
    stats: CorpusStats | None


def sweep(corpus, representations, deltas, vocab_sizes, eval_corpus=None) -> list[SweepEntry]:
    """Train/measure across a config grid.

    By default the corpus is split internally (see split_corpus). Passing an
    explicit eval_corpus promotes the whole corpus to training data instead.
    """
    if eval_corpus is None:
        train_corpus, eval_corpus = split_corpus(corpus)
    else:
        train_corpus = list(corpus)
        eval_corpus = list(eval_corpus)
    sizes = sorted(int(s) for s in vocab_sizes)
    entries: list[SweepEntry] = []
    for rep in representations:
        for delta in deltas:
            delta = float(delta)
            params = QuantizationParams(delta)
            grids = [quantize(ink, params) for ink in train_corpus]
            if rep in ("abs", "rel"):
                base = base_vocab(rep, delta, corpus_coordinates(rep, grids))
            else:
                base = base_vocab(rep, delta)
            feasible = [s for s in sizes if s >= base.base_size]
            full = None
            if feasible:
                full = train_vocab(rep, grids, delta, max(feasible))
            for size in sizes:
                if size < base.base_size:
                    entries.append(SweepEntry(rep, delta, size, "absent", None))
                    continue
                vocab = Vocab(
                    rep, delta, full.base_tokens, full.mergeable_base,
                    full.merges[: size - full.base_size],
                )
                stats = measure(eval_corpus, rep, delta, vocab)
                entries.append(SweepEntry(rep, delta, size, "present", stats))
    return entries


def report_rows(entries) -> list[dict]:
    """Flatten sweep entries to fixed-column rows (absent rows carry nulls)."""
    rows = []
    for e in entries:
        row = {
            "representation": e.representation,
            "delta": e.delta,
            "vocab_size": e.vocab_size,
            "status": e.status,
            "sample_count": e.stats.sample_count if e.stats else None,
            "mean_compression_ratio_base": (
                e.stats.mean_compression_ratio_base if e.stats else None
            ),
            "mean_points_per_token": e.stats.mean_points_per_token if e.stats else None,
            "mean_oov_rate": e.stats.mean_oov_rate if e.stats else None,
        }
        rows.append(row)
    return rows


def write_report_csv(entries, destination) -> None:
    rows = report_rows(entries)

    def write(fh):
        w = csv.DictWriter(fh, fieldnames=REPORT_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if v is None else v) for k, v in row.items()})

    if hasattr(destination, "write"):
        write(destination)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            write(fh)


def write_report_json(entries, destination) -> None:
    payload = {"columns": list(REPORT_COLUMNS), "rows": report_rows(entries)}
    data = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if hasattr(destination, "write"):
        destination.write(data)
    else:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
