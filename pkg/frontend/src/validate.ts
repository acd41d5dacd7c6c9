/** Boundary validation: shape and finiteness checks on arrays crossing into the bindings. */

import { boundaryError } from "./errors.js";
import { REPRESENTATIONS } from "./alphabet.js";

export type Strokes = number[][][];

/**
 * Assert `strokes` is a non-empty array of non-empty strokes of finite
 * (x, y) pairs. `context` prefixes messages, e.g. "corpus[3]: ".
 */
export function assertStrokes(strokes: unknown, context = ""): asserts strokes is Strokes {
  if (!Array.isArray(strokes)) {
    throw boundaryError("InvalidInk", `${context}expected an array of strokes`);
  }
  if (strokes.length === 0) {
    throw boundaryError("EmptyInk", `${context}no strokes`);
  }
  strokes.forEach((stroke, i) => {
    if (!Array.isArray(stroke)) {
      throw boundaryError("InvalidInk", `${context}stroke ${i}: expected a sequence of (x, y) points`);
    }
    if (stroke.length === 0) {
      throw boundaryError("InvalidInk", `${context}stroke ${i}: strokes must contain at least one point`);
    }
    for (const point of stroke) {
      if (!Array.isArray(point) || point.length !== 2) {
        throw boundaryError("InvalidInk", `${context}stroke ${i}: expected a sequence of (x, y) points`);
      }
      const [x, y] = point;
      if (typeof x !== "number" || typeof y !== "number") {
        throw boundaryError("InvalidInk", `${context}stroke ${i}: expected a sequence of (x, y) points`);
      }
      if (!Number.isFinite(x) || !Number.isFinite(y)) {
        throw boundaryError("InvalidInk", `${context}stroke ${i}: coordinates must be finite`);
      }
    }
  });
}

/** Assert `ids` is an array of non-negative integers. */
export function assertIds(ids: unknown): asserts ids is number[] {
  if (!Array.isArray(ids)) {
    throw boundaryError("InvalidToken", "expected an array of token ids");
  }
  ids.forEach((id, i) => {
    if (typeof id !== "number" || !Number.isInteger(id)) {
      throw boundaryError("InvalidToken", `token ids must be integers; index ${i} is ${String(id)}`);
    }
    if (id < 0) {
      throw boundaryError("InvalidToken", `token ids are non-negative; index ${i} is ${id}`);
    }
  });
}

export function assertRepresentation(representation: string): void {
  if (!(REPRESENTATIONS as readonly string[]).includes(representation)) {
    throw boundaryError("InvalidParams", `unknown representation '${representation}'`);
  }
}

export function assertDelta(delta: number): void {
  if (typeof delta !== "number" || !Number.isFinite(delta) || delta <= 0) {
    throw boundaryError("InvalidParams", `delta must be a positive finite number, got ${String(delta)}`);
  }
}

export function assertTargetSize(size: number): void {
  if (typeof size !== "number" || !Number.isInteger(size) || size < 1) {
    throw boundaryError("InvalidParams", `target size must be a positive integer, got ${String(size)}`);
  }
}

export function assertOrigin(origin: unknown): asserts origin is [number, number] {
  if (
    !Array.isArray(origin) ||
    origin.length !== 2 ||
    !Number.isInteger(origin[0]) ||
    !Number.isInteger(origin[1])
  ) {
    throw boundaryError("InvalidParams", "origin must be a pair of integers");
  }
}
