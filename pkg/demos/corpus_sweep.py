"""Compare representations on a synthetic corpus and render a colored ink.

Writes sweep.csv and tokens.svg next to this script.
"""

import random
from pathlib import Path

from inktok import (
    QuantizationParams,
    RawInk,
    bpe_encode,
    ink_to_base_ids,
    quantize,
    render_svg,
    scribe_tokenize,
    sweep,
    train_vocab,
    write_report_csv,
)

HERE = Path(__file__).resolve().parent


def wobbly_ink(rng):
    strokes = []
    for _ in range(rng.randint(1, 3)):
        x, y = rng.uniform(-100, 100), rng.uniform(-40, 40)
        vx = vy = 0.0
        pts = [(x, y)]
        for _ in range(rng.randint(15, 40)):
            vx = 0.75 * vx + rng.uniform(-5, 5)
            vy = 0.75 * vy + rng.uniform(-5, 5)
            x, y = x + vx, y + vy
            pts.append((x, y))
        strokes.append(pts)
    return RawInk(strokes)


rng = random.Random(402)
corpus = [wobbly_ink(rng) for _ in range(24)]

entries = sweep(corpus, ["scribe", "text", "abs", "rel"], [4.0], [64, 1024])
write_report_csv(entries, HERE / "sweep.csv")
print(f"{'rep':8} {'size':>5} {'ratio':>6} {'pts/tok':>8} {'oov':>8}")
for e in entries:
    s = e.stats
    if s is None:
        print(f"{e.representation:8} {e.vocab_size:5} {e.status}")
        continue
    print(
        f"{e.representation:8} {e.vocab_size:5} {s.mean_compression_ratio_base:6.2f} "
        f"{s.mean_points_per_token:8.3f} {s.mean_oov_rate:8.4f}"
    )

# Render one held-out ink with per-token colors under the scribe vocabulary.
ink = wobbly_ink(rng)
delta = 4.0
vocab = train_vocab("scribe", [quantize(i, QuantizationParams(delta)) for i in corpus], delta, 64)
grid = quantize(ink, QuantizationParams(delta))
tokens = bpe_encode(ink_to_base_ids("scribe", grid, vocab), vocab)
render_svg(ink, HERE / "tokens.svg", tokens=tokens, vocab=vocab)
print(f"\nwrote sweep.csv and tokens.svg ({len(tokens)} tokens for {ink.point_count} points)")
