/** Error plumbing: native Error/TypeError with the core library's error name embedded. */

/** Error names the core library can raise; bindings embed them verbatim. */
export const PRIMARY_ERROR_NAMES = [
  "InktokError",
  "InvalidInk",
  "InvalidParams",
  "InvalidToken",
  "EmptyInk",
  "ParseError",
  "ConfigMismatch",
  "BudgetExhausted",
  "Overflow",
] as const;

export type PrimaryErrorName = (typeof PRIMARY_ERROR_NAMES)[number];

/** An Error or TypeError carrying the core error name it corresponds to. */
export interface BindingError extends Error {
  primaryError: string;
}

/**
 * Boundary validation failure: thrown before anything reaches the core
 * library. A native TypeError whose message starts with the core error name.
 */
export function boundaryError(name: PrimaryErrorName, detail: string): BindingError {
  const err = new TypeError(`${name}: ${detail}`) as TypeError & BindingError;
  err.primaryError = name;
  return err;
}

const CLI_ERROR_LINE = /^error: ([A-Za-z]\w*): (.*)$/m;

/**
 * Map a failed CLI invocation to a native Error. The CLI reports failures as
 * a single `error: <Type>: <message>` line on stderr; that type name is
 * preserved in the message and in `primaryError`.
 */
export function cliError(stderr: string, exitCode: number | null): BindingError {
  const match = CLI_ERROR_LINE.exec(stderr);
  if (match) {
    const err = new Error(`${match[1]}: ${match[2]}`) as BindingError;
    err.primaryError = match[1];
    return err;
  }
  const trimmed = stderr.trim();
  const err = new Error(
    `InktokError: inktok exited with status ${exitCode}${trimmed ? `: ${trimmed}` : ""}`,
  ) as BindingError;
  err.primaryError = "InktokError";
  return err;
}
