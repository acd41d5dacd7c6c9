/** Opaque, immutable handle on a trained vocabulary file. */

import { createHash } from "node:crypto";
import { readFileSync, writeFileSync } from "node:fs";

import { boundaryError } from "./errors.js";

export const VOCAB_FORMAT = "inktok-vocab/1";

interface VocabDocument {
  format: string;
  representation: string;
  delta: number;
  base_tokens: string[];
  merges: [number, number][];
}

/**
 * BoundVocab wraps a vocabulary file without interpreting its merge rules.
 * It keeps the exact file bytes, so `save` round-trips byte-identically and
 * `hash` matches the core library's vocabulary hash for files the core wrote
 * (the hash is the first 12 hex chars of the sha256 of the canonical bytes).
 *
 * Instances are frozen; one handle can be shared freely across concurrent
 * callers since every binding call runs in its own subprocess.
 */
export class BoundVocab {
  readonly representation: string;
  readonly delta: number;
  /** Total id count: base alphabet plus learned merges. */
  readonly size: number;
  readonly baseTokens: readonly string[];
  readonly hash: string;
  private readonly bytes: Buffer;

  private constructor(bytes: Buffer, doc: VocabDocument) {
    this.bytes = bytes;
    this.representation = doc.representation;
    this.delta = doc.delta;
    this.baseTokens = Object.freeze([...doc.base_tokens]);
    this.size = doc.base_tokens.length + doc.merges.length;
    this.hash = createHash("sha256").update(bytes).digest("hex").slice(0, 12);
    Object.freeze(this);
  }

  static fromBytes(bytes: Buffer, label = "vocabulary"): BoundVocab {
    let doc: unknown;
    try {
      doc = JSON.parse(bytes.toString("utf8"));
    } catch (exc) {
      throw boundaryError("ParseError", `${label}: ${(exc as Error).message}`);
    }
    const d = doc as Partial<VocabDocument>;
    if (
      typeof d !== "object" ||
      d === null ||
      d.format !== VOCAB_FORMAT ||
      typeof d.representation !== "string" ||
      typeof d.delta !== "number" ||
      !Array.isArray(d.base_tokens) ||
      !Array.isArray(d.merges)
    ) {
      throw boundaryError("ParseError", `${label}: not a '${VOCAB_FORMAT}' vocabulary file`);
    }
    return new BoundVocab(bytes, d as VocabDocument);
  }

  static load(path: string): BoundVocab {
    return BoundVocab.fromBytes(readFileSync(path), path);
  }

  /** Write the vocabulary file exactly as loaded. */
  save(path: string): void {
    writeFileSync(path, this.bytes);
  }
}
