"""End-to-end checks of the command-line front end.

Commands run in-process through main(argv) so coverage and speed stay
reasonable; one test drives the installed console script via subprocess.
"""

import json
import subprocess
import sys

import pytest

from inktok import (
    QuantizationParams,
    RawInk,
    bpe_encode,
    ink_to_base_ids,
    quantize,
    read_ink,
    read_ink_document,
    read_tokens,
    vocab_hash,
    vocab_load,
    write_ink,
)
from inktok.cli import main


@pytest.fixture
def ink_doc(tmp_path):
    """Reference two-stroke ink scaled up by 8 so quantization at delta=8 is non-trivial."""
    path = tmp_path / "ink.json"
    write_ink(RawInk([[(0.0, 0.0), (8.0, 0.0)], [(16.0, 8.0), (32.0, -8.0)]]), path)
    return path


def run_cli(*argv):
    return main([str(a) for a in argv])


def test_quantize(ink_doc, tmp_path):
    out = tmp_path / "grid.json"
    assert run_cli("quantize", "--in", ink_doc, "--delta", "8", "--out", out) == 0
    doc = read_ink_document(out)
    assert doc.ink.to_lists() == [[[0, 0], [1, 0]], [[2, 1], [4, -1]]]
    assert doc.delta == 8.0


def test_tokenize_base_names(ink_doc, tmp_path):
    out = tmp_path / "toks.txt"
    assert run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--out", out) == 0
    tf = read_tokens(out)
    assert tf.representation == "scribe"
    assert tf.vocab_hash is None
    assert tf.origin == (0, 0)
    assert tf.sequences == (("DOWN", "E", "UP", "NE", "DOWN", "SE", "SE", "UP"),)


def test_tokenize_records_origin(tmp_path):
    path = tmp_path / "shifted.json"
    write_ink(RawInk([[(16.0, 8.0), (24.0, 8.0)]]), path)
    out = tmp_path / "toks.txt"
    run_cli("tokenize", "--in", path, "--delta", "8", "--out", out)
    assert read_tokens(out).origin == (2, 1)


def test_tokenize_equals_library_composition(ink_doc, tmp_path, corpus_dir):
    vocab_path = tmp_path / "vocab.json"
    assert run_cli(
        "bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24",
        "--out", vocab_path,
    ) == 0
    out = tmp_path / "ids.txt"
    assert run_cli(
        "tokenize", "--in", ink_doc, "--delta", "8", "--vocab", vocab_path,
        "--out", out,
    ) == 0

    vocab = vocab_load(vocab_path)
    grid = quantize(read_ink(ink_doc), QuantizationParams(8))
    expected = bpe_encode(ink_to_base_ids("scribe", grid, vocab), vocab)
    tf = read_tokens(out)
    assert tf.id_sequences() == [expected]
    assert tf.vocab_hash == vocab_hash(vocab)


def test_round_trip_reproduces_rasterized_path(ink_doc, tmp_path):
    toks = tmp_path / "toks.txt"
    run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--out", toks)
    out = tmp_path / "back.json"
    assert run_cli("detokenize", "--in", toks, "--no-postprocess", "--out", out) == 0
    assert read_ink(out).to_lists() == [
        [[0.0, 0.0], [8.0, 0.0]],
        [[16.0, 8.0], [24.0, 0.0], [32.0, -8.0]],
    ]


def test_detokenize_postprocess_thins_the_walk(ink_doc, tmp_path):
    toks = tmp_path / "toks.txt"
    run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--out", toks)
    out = tmp_path / "back.json"
    assert run_cli("detokenize", "--in", toks, "--out", out) == 0
    # Downsampling by 2 keeps first and last of each short stroke; the
    # smoothing window exceeds both stroke lengths so points pass through.
    assert read_ink(out).to_lists() == [
        [[0.0, 0.0], [8.0, 0.0]],
        [[16.0, 8.0], [32.0, -8.0]],
    ]


def test_detokenize_ids_round_trip(ink_doc, tmp_path, corpus_dir):
    vocab_path = tmp_path / "vocab.json"
    run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24", "--out", vocab_path)
    toks = tmp_path / "ids.txt"
    run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--vocab", vocab_path, "--out", toks)
    out = tmp_path / "back.json"
    assert run_cli("detokenize", "--in", toks, "--vocab", vocab_path, "--no-postprocess", "--out", out) == 0
    assert read_ink(out).to_lists() == [
        [[0.0, 0.0], [8.0, 0.0]],
        [[16.0, 8.0], [24.0, 0.0], [32.0, -8.0]],
    ]


def test_detokenize_ids_without_vocab_fails(ink_doc, tmp_path, corpus_dir, capsys):
    vocab_path = tmp_path / "vocab.json"
    run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24", "--out", vocab_path)
    toks = tmp_path / "ids.txt"
    run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--vocab", vocab_path, "--out", toks)
    assert run_cli("detokenize", "--in", toks, "--out", tmp_path / "x.json") == 1
    err = capsys.readouterr().err.strip()
    assert err.startswith("error: ConfigMismatch:")
    assert "\n" not in err


def test_detokenize_rejects_wrong_vocab(ink_doc, tmp_path, corpus_dir, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24", "--out", a)
    run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "16", "--out", b)
    toks = tmp_path / "ids.txt"
    run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--vocab", a, "--out", toks)
    assert run_cli("detokenize", "--in", toks, "--vocab", b, "--out", tmp_path / "x.json") == 1
    assert capsys.readouterr().err.startswith("error: ConfigMismatch:")


def test_tokenize_vocab_delta_mismatch(ink_doc, tmp_path, corpus_dir, capsys):
    vocab_path = tmp_path / "vocab.json"
    run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24", "--out", vocab_path)
    code = run_cli("tokenize", "--in", ink_doc, "--delta", "4", "--vocab", vocab_path, "--out", tmp_path / "t.txt")
    assert code == 1
    assert capsys.readouterr().err.startswith("error: ConfigMismatch:")


def test_bpe_train_writes_loadable_vocab(tmp_path, corpus_dir):
    out = tmp_path / "vocab.json"
    assert run_cli("bpe-train", "--corpus", corpus_dir, "--rep", "scribe", "--delta", "4", "--size", "30", "--out", out) == 0
    vocab = vocab_load(out)
    assert vocab.representation == "scribe"
    assert vocab.delta == 4.0
    assert vocab.size == 30


def test_bpe_train_tiny_budget_fails(tmp_path, corpus_dir, capsys):
    code = run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "5", "--out", tmp_path / "v.json")
    assert code == 1
    err = capsys.readouterr().err.strip()
    assert err.startswith("error: BudgetExhausted:")
    assert "\n" not in err


def test_missing_input_file_fails_cleanly(tmp_path, capsys):
    code = run_cli("quantize", "--in", tmp_path / "absent.json", "--delta", "8", "--out", tmp_path / "o.json")
    assert code == 1
    err = capsys.readouterr().err.strip()
    assert err.startswith("error: FileNotFoundError:")
    assert "\n" not in err


def test_stats_writes_csv_and_json(tmp_path, corpus_dir):
    csv_out = tmp_path / "report.csv"
    json_out = tmp_path / "report.json"
    code = run_cli(
        "stats", "--corpus", corpus_dir, "--rep", "scribe,text", "--delta", "4,8",
        "--size", "20", "--out", csv_out, "--json", json_out,
    )
    assert code == 0
    lines = csv_out.read_text().strip().splitlines()
    assert len(lines) == 1 + 4  # header + 2 reps x 2 deltas x 1 size
    report = json.loads(json_out.read_text())
    assert len(report["rows"]) == 4


def test_stats_one_sample_corpus_one_row(tmp_path, ink_doc):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "only.json").write_bytes(ink_doc.read_bytes())
    out = tmp_path / "report.csv"
    assert run_cli("stats", "--corpus", corpus, "--rep", "scribe", "--delta", "8", "--size", "14", "--out", out) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 2


def test_stats_separate_eval_corpus(tmp_path, corpus_dir, ink_doc):
    eval_dir = tmp_path / "eval"
    eval_dir.mkdir()
    (eval_dir / "one.json").write_bytes(ink_doc.read_bytes())
    out = tmp_path / "report.csv"
    code = run_cli(
        "stats", "--corpus", corpus_dir, "--eval-dir", eval_dir,
        "--rep", "scribe", "--delta", "8", "--size", "20", "--out", out,
    )
    assert code == 0
    rows = out.read_text().strip().splitlines()
    assert len(rows) == 2
    assert ",1," in rows[1] or rows[1].split(",")[3] == "1"  # sample_count column


def test_stats_rejects_unknown_representation(tmp_path, corpus_dir, capsys):
    code = run_cli("stats", "--corpus", corpus_dir, "--rep", "cursive", "--delta", "8", "--size", "20", "--out", tmp_path / "r.csv")
    assert code == 1
    assert capsys.readouterr().err.startswith("error: InvalidParams:")


def test_import_iam(data_dir, tmp_path):
    out = tmp_path / "ink.json"
    assert run_cli("import-iam", "--in", data_dir / "iam_sample.xml", "--out", out) == 0
    ink = read_ink(out)
    assert len(ink) == 3
    assert ink.strokes[0][0].tolist() == [1073.0, -1058.0]


def test_import_iam_strict_rejects_malformed(data_dir, tmp_path, capsys):
    code = run_cli("import-iam", "--in", data_dir / "iam_malformed.xml", "--out", tmp_path / "o.json")
    assert code == 1
    assert capsys.readouterr().err.startswith("error: ParseError:")


def test_import_iam_lenient_reports_skips(data_dir, tmp_path, capsys):
    out = tmp_path / "ink.json"
    code = run_cli("import-iam", "--in", data_dir / "iam_malformed.xml", "--lenient", "--out", out)
    assert code == 0
    assert "skipped 2" in capsys.readouterr().err
    assert len(read_ink(out)) == 2


def test_render_plain(ink_doc, tmp_path):
    out = tmp_path / "ink.svg"
    assert run_cli("render", "--in", ink_doc, "--out", out) == 0
    svg = out.read_text()
    assert svg.count("<polyline") == 2


def test_render_token_colored(ink_doc, tmp_path, corpus_dir):
    vocab_path = tmp_path / "vocab.json"
    run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24", "--out", vocab_path)
    toks = tmp_path / "ids.txt"
    run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--vocab", vocab_path, "--out", toks)
    out = tmp_path / "ink.svg"
    assert run_cli("render", "--in", ink_doc, "--tokens", toks, "--vocab", vocab_path, "--out", out) == 0
    assert "<line " in out.read_text()


def test_render_tokens_require_id_level_file(ink_doc, tmp_path, corpus_dir, capsys):
    toks = tmp_path / "names.txt"
    run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--out", toks)
    vocab_path = tmp_path / "vocab.json"
    run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24", "--out", vocab_path)
    code = run_cli("render", "--in", ink_doc, "--tokens", toks, "--vocab", vocab_path, "--out", tmp_path / "o.svg")
    assert code == 1
    assert capsys.readouterr().err.startswith("error: ConfigMismatch:")


def test_outputs_are_byte_deterministic(ink_doc, tmp_path, corpus_dir):
    vocabs, tokens, svgs = [], [], []
    for tag in ("a", "b"):
        vocab_path = tmp_path / f"vocab_{tag}.json"
        toks = tmp_path / f"toks_{tag}.txt"
        svg = tmp_path / f"ink_{tag}.svg"
        run_cli("bpe-train", "--corpus", corpus_dir, "--delta", "8", "--size", "24", "--out", vocab_path)
        run_cli("tokenize", "--in", ink_doc, "--delta", "8", "--vocab", vocab_path, "--out", toks)
        run_cli("render", "--in", ink_doc, "--out", svg)
        vocabs.append(vocab_path.read_bytes())
        tokens.append(toks.read_bytes())
        svgs.append(svg.read_bytes())
    assert vocabs[0] == vocabs[1]
    assert tokens[0] == tokens[1]
    assert svgs[0] == svgs[1]


def test_console_script_runs(ink_doc, tmp_path):
    out = tmp_path / "grid.json"
    proc = subprocess.run(
        [sys.executable, "-m", "inktok.cli", "quantize", "--in", str(ink_doc), "--delta", "8", "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert read_ink(out).to_lists() == [[[0, 0], [1, 0]], [[2, 1], [4, -1]]]
