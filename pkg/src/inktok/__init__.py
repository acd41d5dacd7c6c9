"""Lossless tokenization of digital ink.

Integer ink is rewritten as a short alphabet of unit pen moves (Bresenham
walks between points, Freeman chain codes, explicit pen up/down), then
compressed with a constrained BPE whose merges never cross a pen
transition. Baseline representations, corpus metrics, whiteboard-XML
ingestion, reconstruction smoothing, SVG rendering and a CLI round it out.
"""

from .baselines import (
    UNKNOWN_TOKEN,
    UP_TOKEN,
    abs_decode,
    abs_encode,
    point3_decode,
    point3_encode,
    point5_decode,
    point5_encode,
    rel_decode,
    rel_encode,
    text_decode,
    text_encode,
)
from .bpe import (
    END_ID,
    PAD_ID,
    REPRESENTATIONS,
    START_ID,
    UNKNOWN_ID,
    Vocab,
    bpe_decode,
    bpe_encode,
    bpe_train,
    vocab_hash,
    vocab_load,
    vocab_save,
    vocab_to_bytes,
)
from .chain import Direction, bresenham_decompose, step
from .errors import (
    BudgetExhausted,
    ConfigMismatch,
    EmptyInk,
    InktokError,
    InvalidInk,
    InvalidParams,
    InvalidToken,
    Overflow,
    ParseError,
)
from .ink import (
    IntegerInk,
    QuantizationParams,
    RawInk,
    dequantize,
    quantize,
)
from .inkio import (
    InkDocument,
    TokenFile,
    import_iamondb,
    import_iamondb_detailed,
    read_ink,
    read_ink_document,
    read_tokens,
    render_svg,
    write_ink,
    write_tokens,
)
from .metrics import (
    CorpusStats,
    SampleStats,
    SweepEntry,
    measure,
    measure_sample,
    split_corpus,
    sweep,
    write_report_csv,
    write_report_json,
)
from .representations import (
    base_ids_to_ink,
    base_vocab,
    corpus_coordinates,
    ink_to_base_ids,
    ink_to_symbols,
    symbols_to_ink,
    train_vocab,
)
from .scribe import (
    BASE_SIZE,
    DOWN,
    TOKEN_NAMES,
    UP,
    scribe_decode_pipeline,
    scribe_detokenize,
    scribe_tokenize,
)
from .smoothing import (
    PostprocessParams,
    downsample_stroke,
    postprocess_ink,
    savgol_filter,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
