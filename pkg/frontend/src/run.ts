/** Subprocess plumbing: invoke the inktok CLI and manage scratch directories. */

import { spawnSync } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { cliError } from "./errors.js";

/**
 * Run one inktok CLI command to completion. The interpreter defaults to
 * `python3` and can be overridden with the INKTOK_PYTHON environment
 * variable. Throws a native Error with the core error name embedded when the
 * command fails.
 */
export function runInktok(args: string[]): void {
  const python = process.env.INKTOK_PYTHON ?? "python3";
  const result = spawnSync(python, ["-m", "inktok.cli", ...args], {
    encoding: "utf8",
    maxBuffer: 64 * 1024 * 1024,
  });
  if (result.error) {
    const err = cliError(`failed to launch ${python}: ${result.error.message}`, null);
    throw err;
  }
  if (result.status !== 0) {
    throw cliError(result.stderr ?? "", result.status);
  }
}

/** Run `fn` with a fresh scratch directory, removing it afterwards. */
export function withScratchDir<T>(fn: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "inktok-bindings-"));
  try {
    return fn(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}
