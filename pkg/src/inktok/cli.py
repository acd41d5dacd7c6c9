"""Command-line interface.

Seven subcommands cover the pipeline end to end:

  quantize     ink document -> quantized ink document
  tokenize     ink document -> token file (base names, or BPE ids with --vocab)
  detokenize   token file -> reconstructed ink document
  bpe-train    corpus directory -> vocabulary file
  stats        corpus directory -> sweep report (CSV, optionally JSON)
  import-iam   whiteboard XML -> ink document
  render       ink document -> SVG (token-colored with --tokens/--vocab)

Success exits 0. Any domain failure exits 1 after printing a single line to
stderr of the form `error: <ErrorType>: <message>`.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bpe import bpe_decode, bpe_encode, vocab_hash, vocab_load, vocab_save
from .errors import ConfigMismatch, InktokError, InvalidParams
from .ink import IntegerInk, QuantizationParams, dequantize, quantize
from .inkio import (
    import_iamondb_detailed,
    read_ink_document,
    read_tokens,
    render_svg,
    write_ink,
    write_tokens,
)
from .metrics import sweep, write_report_csv, write_report_json
from .representations import (
    REPRESENTATIONS,
    base_ids_to_ink,
    ink_to_base_ids,
    ink_to_symbols,
    symbols_to_ink,
    train_vocab,
)
from .smoothing import PostprocessParams, postprocess_ink


def _corpus_paths(directory: str) -> list[Path]:
    root = Path(directory)
    if not root.is_dir():
        raise InvalidParams(f"{directory} is not a directory")
    paths = sorted(p for p in root.iterdir() if p.suffix == ".json")
    if not paths:
        raise InvalidParams(f"{directory} holds no .json ink documents")
    return paths


def _load_corpus(directory: str):
    return [read_ink_document(p).ink for p in _corpus_paths(directory)]


def _split_list(raw: str, kind):
    try:
        return [kind(part) for part in raw.split(",") if part]
    except ValueError as exc:
        raise InvalidParams(f"bad list value {raw!r}: {exc}") from None


def _quantized(document_path: str, delta: float):
    doc = read_ink_document(document_path)
    grid = quantize(doc.ink, QuantizationParams(delta))
    return doc, grid


def cmd_quantize(args) -> int:
    _, grid = _quantized(args.input, args.delta)
    write_ink(grid, args.output, delta=args.delta)
    return 0


def cmd_tokenize(args) -> int:
    _, grid = _quantized(args.input, args.delta)
    origin = tuple(grid.strokes[0][0].tolist()) if len(grid) else (0, 0)
    if args.vocab:
        vocab = vocab_load(args.vocab)
        if vocab.representation != args.rep:
            raise ConfigMismatch(
                f"vocabulary is for {vocab.representation!r}, not {args.rep!r}"
            )
        if vocab.delta != args.delta:
            raise ConfigMismatch(
                f"vocabulary was built at delta {vocab.delta}, not {args.delta}"
            )
        ids = bpe_encode(ink_to_base_ids(args.rep, grid, vocab), vocab)
        write_tokens(
            args.output, [ids], representation=args.rep, delta=args.delta,
            origin=origin, vocab=vocab,
        )
    else:
        symbols = ink_to_symbols(args.rep, grid)
        write_tokens(
            args.output, [symbols], representation=args.rep, delta=args.delta,
            origin=origin,
        )
    return 0


def cmd_detokenize(args) -> int:
    tf = read_tokens(args.input)
    params = PostprocessParams(args.window, args.polyorder, args.downsample)
    if tf.vocab_hash is not None:
        if not args.vocab:
            raise ConfigMismatch("token file holds BPE ids; pass --vocab")
        vocab = vocab_load(args.vocab)
        if vocab_hash(vocab) != tf.vocab_hash:
            raise ConfigMismatch(
                f"token file was encoded under vocab {tf.vocab_hash}, "
                f"got {vocab_hash(vocab)}"
            )
        strokes = []
        for ids in tf.id_sequences():
            base_ids = bpe_decode(ids, vocab)
            ink = base_ids_to_ink(tf.representation, base_ids, vocab, tf.origin)
            strokes.extend(ink.strokes)
        grid = IntegerInk(strokes)
    else:
        strokes = []
        for seq in tf.sequences:
            ink = symbols_to_ink(tf.representation, seq, tf.origin)
            strokes.extend(ink.strokes)
        grid = IntegerInk(strokes)
    raw = dequantize(grid, QuantizationParams(tf.delta))
    if not args.no_postprocess:
        raw = postprocess_ink(raw, params)
    write_ink(raw, args.output, delta=tf.delta)
    return 0


def cmd_bpe_train(args) -> int:
    corpus = _load_corpus(args.corpus)
    params = QuantizationParams(args.delta)
    grids = [quantize(ink, params) for ink in corpus]
    vocab = train_vocab(args.rep, grids, args.delta, args.size)
    vocab_save(vocab, args.output)
    return 0


def cmd_stats(args) -> int:
    reps = _split_list(args.rep, str)
    for rep in reps:
        if rep not in REPRESENTATIONS:
            raise InvalidParams(f"unknown representation {rep!r}")
    deltas = _split_list(args.delta, float)
    sizes = _split_list(args.size, int)
    corpus = _load_corpus(args.corpus)
    evaluation = _load_corpus(args.eval_dir) if args.eval_dir else None
    entries = sweep(corpus, reps, deltas, sizes, eval_corpus=evaluation)
    write_report_csv(entries, args.output)
    if args.json:
        write_report_json(entries, args.json)
    return 0


def cmd_import_iam(args) -> int:
    ink, skipped = import_iamondb_detailed(args.input, strict=not args.lenient)
    if skipped:
        print(f"skipped {skipped} malformed strokes", file=sys.stderr)
    write_ink(ink, args.output)
    return 0


def cmd_render(args) -> int:
    doc = read_ink_document(args.input)
    if args.tokens:
        if not args.vocab:
            raise ConfigMismatch("--tokens needs --vocab to decode the ids")
        vocab = vocab_load(args.vocab)
        tf = read_tokens(args.tokens)
        if tf.vocab_hash is None:
            raise ConfigMismatch("token-colored rendering needs an id-level token file")
        if vocab_hash(vocab) != tf.vocab_hash:
            raise ConfigMismatch(
                f"token file was encoded under vocab {tf.vocab_hash}, "
                f"got {vocab_hash(vocab)}"
            )
        ids = [t for seq in tf.id_sequences() for t in seq]
        render_svg(doc.ink, args.output, tokens=ids, vocab=vocab)
    else:
        render_svg(doc.ink, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inktok", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quantize", help="snap an ink document to a grid")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(handler=cmd_quantize)

    p = sub.add_parser("tokenize", help="encode an ink document as tokens")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--rep", choices=REPRESENTATIONS, default="scribe")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--vocab", help="vocabulary file; output switches to BPE ids")
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(handler=cmd_tokenize)

    p = sub.add_parser("detokenize", help="reconstruct ink from a token file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--vocab", help="vocabulary file (required for id-level files)")
    p.add_argument("--window", type=int, default=7)
    p.add_argument("--polyorder", type=int, default=3)
    p.add_argument("--downsample", type=int, default=2)
    p.add_argument("--no-postprocess", action="store_true", help="skip smoothing")
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(handler=cmd_detokenize)

    p = sub.add_parser("bpe-train", help="learn a BPE vocabulary from a corpus")
    p.add_argument("--corpus", required=True, help="directory of ink documents")
    p.add_argument("--rep", choices=REPRESENTATIONS, default="scribe")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(handler=cmd_bpe_train)

    p = sub.add_parser("stats", help="sweep configurations and report metrics")
    p.add_argument("--corpus", required=True, help="directory of ink documents")
    p.add_argument("--eval-dir", help="separate evaluation corpus directory")
    p.add_argument("--rep", default="scribe", help="comma-separated representation tags")
    p.add_argument("--delta", required=True, help="comma-separated grid sizes")
    p.add_argument("--size", required=True, help="comma-separated vocab budgets")
    p.add_argument("--out", dest="output", required=True, help="CSV report path")
    p.add_argument("--json", help="also write a JSON report here")
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("import-iam", help="convert whiteboard XML to an ink document")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--lenient", action="store_true", help="skip malformed strokes")
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(handler=cmd_import_iam)

    p = sub.add_parser("render", help="draw an ink document as SVG")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--tokens", help="token file for per-token coloring")
    p.add_argument("--vocab", help="vocabulary for --tokens")
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(handler=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InktokError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
