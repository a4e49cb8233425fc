/**
 * Wrapper around the exactcalc command line.
 *
 * Values are built as expression trees and evaluated by the CLI, so the
 * wrapper contains no arithmetic of its own; it only speaks the external
 * interface (subcommands, the machine JSON format, and exit codes: 0
 * decided, 2 Unknown, 1 error). Decided predicates come back as booleans;
 * an Unknown answer raises UnknownPredicateError instead of guessing.
 */

import { spawnSync } from "node:child_process";

/** Raised when the library cannot decide a predicate under its work limits. */
export class UnknownPredicateError extends Error {
  constructor(message = "unable to decide predicate") {
    super(message);
    this.name = "UnknownPredicateError";
  }
}

/** Raised for CLI-level failures (syntax errors, domain errors, crashes). */
export class ExactCalcError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ExactCalcError";
  }
}

export interface SessionOptions {
  /** Maximum working precision in bits (--prec-limit). */
  precLimit?: number;
  /** Precision for integer-relation searches (--lll-prec). */
  lllPrec?: number;
  noGroebner?: boolean;
  noVieta?: boolean;
  degreeLimit?: number;
  powExpandLimit?: number;
  /**
   * Command used to launch the CLI. Defaults to $EXACTCALC_BIN if set,
   * otherwise `python3 -m exactcalc.cli`.
   */
  command?: string[];
}

export interface MachineResult {
  decimal: string | null;
  field_generators: unknown[] | null;
  numerator: unknown[] | null;
  denominator: unknown[] | null;
  truth: string | null;
  special?: string;
  result?: string;
}

type Operand = ExactValue | number | bigint | string;

function literal(value: number | bigint | string): string {
  if (typeof value === "bigint") return value.toString();
  if (typeof value === "string") return value;
  if (!Number.isSafeInteger(value)) {
    throw new ExactCalcError(
      `only exact integers may be passed as numbers, got ${value}; ` +
      `use a string literal for fractions or decimals`);
  }
  return value.toString();
}

export class ExactSession {
  readonly options: SessionOptions;
  private readonly launcher: string[];

  constructor(options: SessionOptions = {}) {
    this.options = options;
    this.launcher = options.command
      ?? (process.env.EXACTCALC_BIN
        ? [process.env.EXACTCALC_BIN]
        : ["python3", "-m", "exactcalc.cli"]);
  }

  /** Wrap an exact integer (or a raw expression string) as a value. */
  ca(value: number | bigint | string): ExactValue {
    return new ExactValue(this, `(${literal(value)})`);
  }

  get pi(): ExactValue {
    return new ExactValue(this, "(pi)");
  }

  get i(): ExactValue {
    return new ExactValue(this, "(i)");
  }

  sqrt(x: Operand): ExactValue {
    return new ExactValue(this, `sqrt(${this.text(x)})`);
  }

  exp(x: Operand): ExactValue {
    return new ExactValue(this, `exp(${this.text(x)})`);
  }

  log(x: Operand): ExactValue {
    return new ExactValue(this, `log(${this.text(x)})`);
  }

  pow(x: Operand, y: Operand): ExactValue {
    return new ExactValue(this, `pow(${this.text(x)}, ${this.text(y)})`);
  }

  text(x: Operand): string {
    if (x instanceof ExactValue) {
      if (x.session !== this) {
        throw new ExactCalcError("value belongs to a different session");
      }
      return x.expr;
    }
    return `(${literal(x)})`;
  }

  flags(): string[] {
    const out: string[] = [];
    const o = this.options;
    if (o.precLimit !== undefined) out.push("--prec-limit", String(o.precLimit));
    if (o.lllPrec !== undefined) out.push("--lll-prec", String(o.lllPrec));
    if (o.noGroebner) out.push("--no-groebner");
    if (o.noVieta) out.push("--no-vieta");
    if (o.degreeLimit !== undefined) out.push("--degree-limit", String(o.degreeLimit));
    if (o.powExpandLimit !== undefined) {
      out.push("--pow-expand-limit", String(o.powExpandLimit));
    }
    return out;
  }

  run(subcommand: string, args: string[],
      machine = false): { stdout: string; code: number } {
    const argv = [
      ...this.launcher.slice(1),
      subcommand,
      ...args,
      ...this.flags(),
      ...(machine ? ["--output", "machine"] : []),
    ];
    const proc = spawnSync(this.launcher[0], argv, {
      encoding: "utf-8",
      timeout: 600_000,
    });
    if (proc.error) {
      throw new ExactCalcError(`failed to launch exactcalc: ${proc.error.message}`);
    }
    const code = proc.status ?? 1;
    if (code !== 0 && code !== 2) {
      throw new ExactCalcError(
        (proc.stderr || "").trim() || `exactcalc exited with code ${code}`);
    }
    return { stdout: proc.stdout, code };
  }
}

export class ExactValue {
  constructor(readonly session: ExactSession, readonly expr: string) {}

  private wrap(text: string): ExactValue {
    return new ExactValue(this.session, text);
  }

  add(other: Operand): ExactValue {
    return this.wrap(`(${this.expr} + ${this.session.text(other)})`);
  }

  sub(other: Operand): ExactValue {
    return this.wrap(`(${this.expr} - ${this.session.text(other)})`);
  }

  mul(other: Operand): ExactValue {
    return this.wrap(`(${this.expr} * ${this.session.text(other)})`);
  }

  div(other: Operand): ExactValue {
    return this.wrap(`(${this.expr} / ${this.session.text(other)})`);
  }

  pow(other: Operand): ExactValue {
    return this.wrap(`(${this.expr} ^ ${this.session.text(other)})`);
  }

  neg(): ExactValue {
    return this.wrap(`(-${this.expr})`);
  }

  /** The library's exact display line, e.g. "0.141593 {a-3 where a = ...}". */
  toString(): string {
    const { stdout } = this.session.run("eval", [this.expr]);
    return stdout.replace(/\n$/, "");
  }

  /** Machine-readable form (decimal, generators, numerator, denominator). */
  machine(): MachineResult {
    const { stdout } = this.session.run("eval", [this.expr], true);
    return JSON.parse(stdout) as MachineResult;
  }

  private predicate(subcommand: string, args: string[]): string {
    const { stdout, code } = this.session.run(subcommand, args);
    const answer = stdout.trim();
    if (code === 2 || answer === "Unknown") {
      throw new UnknownPredicateError(
        `unable to decide predicate: ${subcommand}`);
    }
    return answer;
  }

  /** Certified zero test; throws UnknownPredicateError when undecided. */
  isZero(): boolean {
    return this.predicate("is-zero", [this.expr]) === "True";
  }

  /** Certified equality; throws UnknownPredicateError when undecided. */
  equals(other: Operand): boolean {
    return this.predicate("equal", [this.expr, this.session.text(other)]) === "True";
  }

  /** Ordering for provably real operands. */
  lessThan(other: Operand): boolean {
    return this.predicate("cmp", [this.expr, this.session.text(other)]) === "lt";
  }

  greaterThan(other: Operand): boolean {
    return this.predicate("cmp", [this.expr, this.session.text(other)]) === "gt";
  }
}
