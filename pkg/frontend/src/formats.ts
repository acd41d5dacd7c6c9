/** File-format plumbing shared with the core library: ink documents and token files. */

import { readFileSync, writeFileSync } from "node:fs";

import { boundaryError } from "./errors.js";
import type { Strokes } from "./validate.js";

export const INK_FORMAT = "inktok-ink/1";
export const TOKEN_HEADER_PREFIX = "#inktok-tokens v1";

/**
 * Format a float the way the core library prints it into token headers
 * (Python repr): integral values keep a trailing ".0". Shortest-round-trip
 * digits otherwise, which Node's String() already produces.
 */
export function pyFloatRepr(x: number): string {
  if (Number.isInteger(x) && Math.abs(x) < 1e16) {
    return `${x}.0`;
  }
  return String(x);
}

/** Write strokes as an ink document the CLI can read. */
export function writeInkDocument(path: string, strokes: Strokes): void {
  writeFileSync(path, JSON.stringify({ format: INK_FORMAT, strokes }, null, 2) + "\n");
}

/** Read the strokes array out of an ink document. */
export function readInkDocument(path: string): Strokes {
  let doc: unknown;
  try {
    doc = JSON.parse(readFileSync(path, "utf8"));
  } catch (exc) {
    throw boundaryError("ParseError", `${path}: ${(exc as Error).message}`);
  }
  if (
    typeof doc !== "object" ||
    doc === null ||
    !Array.isArray((doc as { strokes?: unknown }).strokes)
  ) {
    throw boundaryError("ParseError", `${path}: not an ink document`);
  }
  return (doc as { strokes: Strokes }).strokes;
}

export interface TokenFileData {
  representation: string;
  delta: number;
  /** null for base-level (named token) files. */
  vocabHash: string | null;
  origin: [number, number];
  /** One sequence per line, atoms kept as strings. */
  sequences: string[][];
}

/** Parse a token file: header line, then one whitespace-separated sequence per line. */
export function parseTokenFile(text: string, label = "token file"): TokenFileData {
  const lines = text.split(/\r?\n/);
  if (lines.length === 0 || !lines[0].startsWith(TOKEN_HEADER_PREFIX)) {
    throw boundaryError("ParseError", `${label}: missing token header line '${TOKEN_HEADER_PREFIX} ...'`);
  }
  const fields = new Map<string, string>();
  for (const part of lines[0].slice(TOKEN_HEADER_PREFIX.length).trim().split(/\s+/)) {
    if (part === "") continue;
    const eq = part.indexOf("=");
    if (eq < 0) {
      throw boundaryError("ParseError", `${label}: bad header field '${part}'`);
    }
    fields.set(part.slice(0, eq), part.slice(eq + 1));
  }
  for (const key of ["rep", "delta", "vocab", "origin"]) {
    if (!fields.has(key)) {
      throw boundaryError("ParseError", `${label}: header is missing ${key}=...`);
    }
  }
  const delta = Number(fields.get("delta"));
  const originParts = (fields.get("origin") as string).split(",");
  const ox = Number(originParts[0]);
  const oy = Number(originParts[1]);
  if (!Number.isFinite(delta) || originParts.length !== 2 || !Number.isInteger(ox) || !Number.isInteger(oy)) {
    throw boundaryError("ParseError", `${label}: bad header value`);
  }
  const tag = fields.get("vocab") as string;
  const sequences = lines
    .slice(1)
    .filter((line) => line.trim() !== "")
    .map((line) => line.trim().split(/\s+/));
  return {
    representation: fields.get("rep") as string,
    delta,
    vocabHash: tag === "none" ? null : tag,
    origin: [ox, oy],
    sequences,
  };
}

export function readTokenFile(path: string): TokenFileData {
  return parseTokenFile(readFileSync(path, "utf8"), path);
}

/** Write a token file in the exact shape the CLI produces. */
export function writeTokenFile(path: string, data: TokenFileData): void {
  const header =
    `${TOKEN_HEADER_PREFIX} rep=${data.representation} delta=${pyFloatRepr(data.delta)} ` +
    `vocab=${data.vocabHash ?? "none"} origin=${data.origin[0]},${data.origin[1]}`;
  const body = data.sequences.map((seq) => seq.join(" ")).join("\n");
  writeFileSync(path, header + "\n" + body + "\n");
}
