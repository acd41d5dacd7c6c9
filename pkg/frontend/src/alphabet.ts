/**
 * Pinned base alphabets, in id order. These mirror the core library's token
 * layout contract: four specials first, then the representation's content
 * tokens. Only the fixed-alphabet representations appear here; abs and rel
 * derive their alphabets from training data, so their ids are only meaningful
 * relative to a vocabulary file.
 */

export const SCRIBE_TOKEN_NAMES = [
  "PAD",
  "START",
  "END",
  "UNKNOWN",
  "E",
  "NE",
  "N",
  "NW",
  "W",
  "SW",
  "S",
  "SE",
  "DOWN",
  "UP",
] as const;

export const TEXT_TOKEN_NAMES = [
  "PAD",
  "START",
  "END",
  "UNKNOWN",
  "0",
  "1",
  "2",
  "3",
  "4",
  "5",
  "6",
  "7",
  "8",
  "9",
  "-",
  "SP",
  "UP",
] as const;

export const REPRESENTATIONS = ["scribe", "abs", "rel", "text"] as const;

export type Representation = (typeof REPRESENTATIONS)[number];

/** Name-to-id table for a fixed-alphabet representation, or null. */
export function fixedAlphabet(representation: string): ReadonlyMap<string, number> | null {
  if (representation === "scribe") return toMap(SCRIBE_TOKEN_NAMES);
  if (representation === "text") return toMap(TEXT_TOKEN_NAMES);
  return null;
}

function toMap(names: readonly string[]): ReadonlyMap<string, number> {
  return new Map(names.map((name, id) => [name, id]));
}
