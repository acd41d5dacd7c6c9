/**
 * TypeScript bindings for the inktok digital-ink tokenizer.
 *
 * Every operation shells out to the installed `inktok` command-line tool and
 * exchanges data through its documented file formats; no tokenization logic
 * lives on this side of the boundary. Calls are synchronous and isolated, so
 * concurrent callers (worker threads included) scale with available cores.
 */

export { bTokenize, bDetokenize, bTrainVocab, type DetokenizeOptions } from "./bindings.js";
export { BoundVocab, VOCAB_FORMAT } from "./vocab.js";
export {
  REPRESENTATIONS,
  SCRIBE_TOKEN_NAMES,
  TEXT_TOKEN_NAMES,
  fixedAlphabet,
  type Representation,
} from "./alphabet.js";
export {
  INK_FORMAT,
  TOKEN_HEADER_PREFIX,
  parseTokenFile,
  readInkDocument,
  readTokenFile,
  writeInkDocument,
  writeTokenFile,
  type TokenFileData,
} from "./formats.js";
export { PRIMARY_ERROR_NAMES, type BindingError, type PrimaryErrorName } from "./errors.js";
export { runInktok } from "./run.js";
export type { Strokes } from "./validate.js";

/** Mirrors the core library's version. */
export const VERSION = "0.1.0";
