/** The binding surface: tokenize, detokenize, and vocabulary training. */

import { copyFileSync, mkdirSync } from "node:fs";
import { join } from "node:path";

import { fixedAlphabet } from "./alphabet.js";
import { boundaryError } from "./errors.js";
import {
  readInkDocument,
  readTokenFile,
  writeInkDocument,
  writeTokenFile,
} from "./formats.js";
import { runInktok, withScratchDir } from "./run.js";
import {
  assertDelta,
  assertIds,
  assertOrigin,
  assertRepresentation,
  assertStrokes,
  assertTargetSize,
  type Strokes,
} from "./validate.js";
import { BoundVocab } from "./vocab.js";

function assertVocab(vocab: unknown): asserts vocab is BoundVocab {
  if (!(vocab instanceof BoundVocab)) {
    throw boundaryError("InvalidParams", "expected a BoundVocab");
  }
}

function assertVocabMatches(vocab: BoundVocab, representation: string, delta: number): void {
  if (vocab.representation !== representation) {
    throw boundaryError(
      "ConfigMismatch",
      `vocabulary is for '${vocab.representation}', not '${representation}'`,
    );
  }
  if (vocab.delta !== delta) {
    throw boundaryError(
      "ConfigMismatch",
      `vocabulary was built at delta ${vocab.delta}, not ${delta}`,
    );
  }
}

/**
 * Tokenize raw strokes: quantize at `delta`, encode under `representation`,
 * and return token ids. With a vocabulary the ids are BPE ids; without one
 * they are base ids, which only the fixed-alphabet representations (scribe,
 * text) define. Matches the CLI's `tokenize` subcommand output exactly.
 */
export function bTokenize(
  strokes: Strokes,
  representation: string,
  delta: number,
  vocab?: BoundVocab,
): number[] {
  assertStrokes(strokes);
  assertRepresentation(representation);
  assertDelta(delta);
  if (vocab !== undefined) {
    assertVocab(vocab);
    assertVocabMatches(vocab, representation, delta);
  } else if (fixedAlphabet(representation) === null) {
    throw boundaryError(
      "InvalidParams",
      `'${representation}' ids are relative to a trained vocabulary; pass a BoundVocab`,
    );
  }

  return withScratchDir((dir) => {
    const inkPath = join(dir, "ink.json");
    const tokensPath = join(dir, "tokens.txt");
    writeInkDocument(inkPath, strokes);
    const args = ["tokenize", "--in", inkPath, "--rep", representation, "--delta", String(delta)];
    if (vocab) {
      const vocabPath = join(dir, "vocab.json");
      vocab.save(vocabPath);
      args.push("--vocab", vocabPath);
    }
    args.push("--out", tokensPath);
    runInktok(args);

    const tf = readTokenFile(tokensPath);
    const sequence = tf.sequences[0] ?? [];
    if (tf.vocabHash !== null) {
      return sequence.map(Number);
    }
    const alphabet = fixedAlphabet(representation) as ReadonlyMap<string, number>;
    return sequence.map((name) => {
      const id = alphabet.get(name);
      if (id === undefined) {
        throw boundaryError("ParseError", `unknown ${representation} token name '${name}'`);
      }
      return id;
    });
  });
}

export interface DetokenizeOptions {
  /** Apply reconstruction smoothing (the CLI default). Set false for the exact grid walk. */
  postprocess?: boolean;
  /** Grid point anchoring the decoded ink; defaults to [0, 0]. */
  origin?: [number, number];
  window?: number;
  polyorder?: number;
  downsample?: number;
  /** Also copy the reconstructed ink document (exact CLI bytes) here. */
  outFile?: string;
}

/**
 * Decode token ids back to strokes in input units. Ids are interpreted under
 * `vocab`; reconstruction runs through the CLI's `detokenize` subcommand, so
 * output equals the CLI's byte for byte (see `outFile`).
 */
export function bDetokenize(
  ids: number[],
  representation: string,
  delta: number,
  vocab: BoundVocab,
  options: DetokenizeOptions = {},
): Strokes {
  assertIds(ids);
  assertRepresentation(representation);
  assertDelta(delta);
  assertVocab(vocab);
  assertVocabMatches(vocab, representation, delta);
  const origin = options.origin ?? [0, 0];
  assertOrigin(origin);
  for (const knob of ["window", "polyorder", "downsample"] as const) {
    const value = options[knob];
    if (value !== undefined && !Number.isInteger(value)) {
      throw boundaryError("InvalidParams", `${knob} must be an integer, got ${String(value)}`);
    }
  }

  return withScratchDir((dir) => {
    const tokensPath = join(dir, "tokens.txt");
    const vocabPath = join(dir, "vocab.json");
    const restoredPath = join(dir, "restored.json");
    vocab.save(vocabPath);
    writeTokenFile(tokensPath, {
      representation,
      delta,
      vocabHash: vocab.hash,
      origin,
      sequences: [ids.map(String)],
    });
    const args = ["detokenize", "--in", tokensPath, "--vocab", vocabPath];
    if (options.postprocess === false) {
      args.push("--no-postprocess");
    } else {
      if (options.window !== undefined) args.push("--window", String(options.window));
      if (options.polyorder !== undefined) args.push("--polyorder", String(options.polyorder));
      if (options.downsample !== undefined) args.push("--downsample", String(options.downsample));
    }
    args.push("--out", restoredPath);
    runInktok(args);
    if (options.outFile) {
      copyFileSync(restoredPath, options.outFile);
    }
    return readInkDocument(restoredPath);
  });
}

/**
 * Train a vocabulary of `targetSize` ids on a corpus of raw inks, mirroring
 * the CLI's `bpe-train` subcommand. The returned handle can be saved,
 * reloaded, and passed to bTokenize/bDetokenize.
 */
export function bTrainVocab(
  corpus: Strokes[],
  representation: string,
  delta: number,
  targetSize: number,
): BoundVocab {
  if (!Array.isArray(corpus)) {
    throw boundaryError("InvalidInk", "expected an array of inks");
  }
  if (corpus.length === 0) {
    throw boundaryError("EmptyInk", "empty corpus");
  }
  corpus.forEach((strokes, i) => assertStrokes(strokes, `corpus[${i}]: `));
  assertRepresentation(representation);
  assertDelta(delta);
  assertTargetSize(targetSize);

  return withScratchDir((dir) => {
    const corpusDir = join(dir, "corpus");
    mkdirSync(corpusDir);
    const width = Math.max(3, String(corpus.length - 1).length);
    corpus.forEach((strokes, i) => {
      writeInkDocument(join(corpusDir, `ink-${String(i).padStart(width, "0")}.json`), strokes);
    });
    const vocabPath = join(dir, "vocab.json");
    runInktok([
      "bpe-train",
      "--corpus",
      corpusDir,
      "--rep",
      representation,
      "--delta",
      String(delta),
      "--size",
      String(targetSize),
      "--out",
      vocabPath,
    ]);
    return BoundVocab.load(vocabPath);
  });
}
