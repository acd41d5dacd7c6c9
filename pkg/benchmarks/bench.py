"""Single-thread throughput floors for the two hot paths.

Run directly for a report, or import the bench_* functions (the acceptance
suite asserts the floors: tokenize >= 100k points/s, encode >= 1M base
tokens/s).
"""

import argparse
import json
import random
import time

from inktok import DOWN, IntegerInk, UP, bpe_encode, bpe_train, base_vocab, scribe_tokenize


def _walk_ink(points: int, seed: int) -> IntegerInk:
    rng = random.Random(seed)
    strokes = []
    remaining = points
    while remaining > 0:
        n = min(500, remaining)
        x, y = rng.randint(-50, 50), rng.randint(-50, 50)
        pts = [(x, y)]
        for _ in range(n - 1):
            x += rng.randint(-6, 6)
            y += rng.randint(-6, 6)
            pts.append((x, y))
        strokes.append(pts)
        remaining -= n
    return IntegerInk(strokes)


def _direction_stream(tokens: int, seed: int) -> list[int]:
    """Base ids with runs and pen breaks, so merges actually fire."""
    rng = random.Random(seed)
    out = [DOWN]
    direction = rng.randrange(4, 12)
    while len(out) < tokens - 1:
        if rng.random() < 0.025:
            out.append(UP)
            out.append(DOWN)
            continue
        if rng.random() < 0.3:
            direction = rng.randrange(4, 12)
        out.append(direction)
    out.append(UP)
    return out


def bench_tokenize(points: int = 200_000, seed: int = 7, repeats: int = 3) -> float:
    """Points tokenized per second, best of `repeats` runs."""
    ink = _walk_ink(points, seed)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        scribe_tokenize(ink)
        best = min(best, time.perf_counter() - t0)
    return ink.point_count / best


def bench_bpe_encode(tokens: int = 2_000_000, seed: int = 11, repeats: int = 2) -> float:
    """Base tokens encoded per second under a 64-entry vocabulary."""
    vocab = bpe_train([_direction_stream(50_000, seed + 1)], 64, base_vocab("scribe", delta=1))
    stream = _direction_stream(tokens, seed)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        bpe_encode(stream, vocab)
        best = min(best, time.perf_counter() - t0)
    return len(stream) / best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--points", type=int, default=200_000)
    parser.add_argument("--tokens", type=int, default=2_000_000)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    args = parser.parse_args(argv)

    tok_rate = bench_tokenize(args.points)
    enc_rate = bench_bpe_encode(args.tokens)
    if args.json:
        print(json.dumps({"tokenize_points_per_s": tok_rate, "bpe_encode_tokens_per_s": enc_rate}))
    else:
        print(f"scribe_tokenize: {tok_rate / 1e3:,.0f}k points/s")
        print(f"bpe_encode:      {enc_rate / 1e6:,.2f}M base tokens/s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
