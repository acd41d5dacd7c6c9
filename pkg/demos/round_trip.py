"""Walk one ink through the whole codec: quantize, tokenize, merge, restore."""

from inktok import (
    IntegerInk,
    PostprocessParams,
    QuantizationParams,
    RawInk,
    base_vocab,
    bpe_decode,
    bpe_encode,
    bpe_train,
    dequantize,
    postprocess_ink,
    quantize,
    scribe_detokenize,
    scribe_tokenize,
)
from inktok.scribe import TOKEN_NAMES

# A loop and a crossing bar, in raw tablet-ish coordinates.
ink = RawInk([
    [(0.0, 0.0), (24.0, 31.0), (49.0, 43.0), (74.0, 30.0), (97.0, 1.0),
     (74.0, -28.0), (48.0, -41.0), (25.0, -30.0), (2.0, -2.0)],
    [(20.0, 60.0), (80.0, -60.0)],
])

delta = 8.0
grid = quantize(ink, QuantizationParams(delta))
tokens = scribe_tokenize(grid)
print(f"{ink.point_count} raw points -> {len(tokens)} base tokens at delta={delta}")
print(" ".join(TOKEN_NAMES[t] for t in tokens))

vocab = bpe_train([tokens], 32, base_vocab("scribe", delta=delta))
encoded = bpe_encode(tokens, vocab)
print(f"\n{len(vocab.merges)} learned merges compress {len(tokens)} -> {len(encoded)} tokens")
print(" ".join(vocab.name_of(t) for t in encoded))

assert bpe_decode(encoded, vocab) == tokens

origin = tuple(grid.strokes[0][0].tolist())
walk = scribe_detokenize(tokens, origin)
restored = postprocess_ink(dequantize(walk, QuantizationParams(delta)), PostprocessParams())
print(f"\ndecoded walk has {walk.point_count} cells; smoothed ink keeps {restored.point_count} points")
for stroke in restored.strokes:
    print("  " + " ".join(f"({x:.1f},{y:.1f})" for x, y in stroke))
