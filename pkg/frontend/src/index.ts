/**
 * Node.js binding for the `hantok` Korean tokenization CLI.
 *
 * The binding shells out to the installed `hantok` executable and exchanges
 * data through its documented file formats: one sentence per line on the text
 * side, space-separated tokens per line on the token side, UTF-8 with `\n`
 * endings everywhere. Set the HANTOK_CLI environment variable (or the `cli`
 * option) to launch the CLI differently, e.g. `HANTOK_CLI="python3 -m hantok"`.
 */

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

export type Strategy =
  | "cv"
  | "syllable"
  | "morpheme"
  | "subword"
  | "morpheme-subword"
  | "word";

/** Morphological analysis source; the CLI accepts at most one of these. */
export interface MorphOptions {
  /** Path to a dictionary file, one morpheme per line. */
  morphDict?: string;
  /** Path to a TSV file of `source<TAB>segmented` pairs. */
  wakati?: string;
  /** External analyzer command reading lines on stdin. */
  morphCmd?: string;
}

export interface TokenizerOptions extends MorphOptions {
  /** Model directory produced by `train` (required for subword strategies). */
  model?: string;
  /** Override the CLI launch command for this instance. */
  cli?: string;
}

export interface TrainOptions extends MorphOptions {
  strategy: Strategy;
  vocabSize: number;
  /** Path to the training corpus, one sentence per line. */
  corpusPath: string;
  /** Directory to write model files into. */
  modelDir: string;
  cli?: string;
}

export interface StatsOptions extends MorphOptions {
  strategy: Strategy;
  model: string;
  /** Path to the evaluation corpus. */
  inputPath: string;
  /** Training corpus path; enables the under-trained curve. */
  trainPath?: string;
  cli?: string;
}

export interface BoundarySpanning {
  count: number;
  percentage: number;
}

export interface StatsReport {
  strategy: Strategy;
  vocab_size: number;
  oov_rate: number;
  avg_len: number;
  avg_syllables_per_token: number;
  boundary_spanning: BoundarySpanning | null;
  under_trained_curve: number[] | null;
}

/** Raised when the CLI exits nonzero; carries its exit code and stderr. */
export class HantokCliError extends Error {
  constructor(
    readonly exitCode: number,
    readonly stderr: string,
  ) {
    super(`hantok exited with code ${exitCode}: ${stderr.trim()}`);
    this.name = "HantokCliError";
  }
}

function cliArgv(override?: string): string[] {
  const spec = override ?? process.env.HANTOK_CLI ?? "hantok";
  const argv = spec.trim().split(/\s+/);
  if (argv.length === 0 || argv[0] === "") {
    throw new Error("empty hantok CLI command");
  }
  return argv;
}

function runCli(args: string[], cli?: string): string {
  const [command, ...prefix] = cliArgv(cli);
  const proc = spawnSync(command, [...prefix, ...args], { encoding: "utf-8" });
  if (proc.error) {
    throw new Error(`failed to launch ${command}: ${proc.error.message}`);
  }
  if (proc.status !== 0) {
    throw new HantokCliError(proc.status ?? -1, proc.stderr ?? "");
  }
  return proc.stdout;
}

function morphArgs(options: MorphOptions): string[] {
  const args: string[] = [];
  if (options.morphDict !== undefined) args.push("--morph-dict", options.morphDict);
  if (options.wakati !== undefined) args.push("--wakati", options.wakati);
  if (options.morphCmd !== undefined) args.push("--morph-cmd", options.morphCmd);
  return args;
}

function serializeLines(lines: string[]): string {
  return lines.map((line) => line + "\n").join("");
}

function parseLines(content: string): string[] {
  if (content === "") return [];
  const body = content.endsWith("\n") ? content.slice(0, -1) : content;
  return body.split("\n");
}

function parseTokenLine(line: string): string[] {
  return line === "" ? [] : line.split(" ");
}

function withTempDir<T>(fn: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "hantok-"));
  try {
    return fn(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

/**
 * A tokenizer bound to one strategy and its model/analyzer configuration.
 * Each batch call is one CLI invocation; prefer the `*Lines` methods when
 * processing many sentences.
 */
export class Tokenizer {
  constructor(
    readonly strategy: Strategy,
    readonly options: TokenizerOptions = {},
  ) {}

  private commonArgs(): string[] {
    const args = ["--strategy", this.strategy];
    if (this.options.model !== undefined) args.push("--model", this.options.model);
    return [...args, ...morphArgs(this.options)];
  }

  tokenizeLines(lines: string[]): string[][] {
    return withTempDir((dir) => {
      const inputPath = join(dir, "input.txt");
      const outputPath = join(dir, "output.tok");
      writeFileSync(inputPath, serializeLines(lines), "utf-8");
      runCli(
        ["encode", ...this.commonArgs(), "--input", inputPath, "--output", outputPath],
        this.options.cli,
      );
      return parseLines(readFileSync(outputPath, "utf-8")).map(parseTokenLine);
    });
  }

  tokenize(text: string): string[] {
    return this.tokenizeLines([text])[0];
  }

  detokenizeLines(tokenLines: string[][]): string[] {
    return withTempDir((dir) => {
      const inputPath = join(dir, "input.tok");
      const outputPath = join(dir, "output.txt");
      writeFileSync(
        inputPath,
        serializeLines(tokenLines.map((tokens) => tokens.join(" "))),
        "utf-8",
      );
      // Decoding is purely structural; the CLI takes no model or analyzer here.
      runCli(
        ["decode", "--strategy", this.strategy, "--input", inputPath, "--output", outputPath],
        this.options.cli,
      );
      return parseLines(readFileSync(outputPath, "utf-8"));
    });
  }

  detokenize(tokens: string[]): string {
    return this.detokenizeLines([tokens])[0];
  }
}

/** Train a model; returns the CLI's training summary (stdout). */
export function train(options: TrainOptions): string {
  return runCli(
    [
      "train",
      "--strategy", options.strategy,
      "--vocab-size", String(options.vocabSize),
      "--input", options.corpusPath,
      "--model", options.modelDir,
      ...morphArgs(options),
    ],
    options.cli,
  );
}

/** Evaluate a model on a corpus and return the parsed JSON report. */
export function stats(options: StatsOptions): StatsReport {
  return withTempDir((dir) => {
    const reportPath = join(dir, "report.json");
    const args = [
      "stats",
      "--strategy", options.strategy,
      "--model", options.model,
      "--input", options.inputPath,
      "--report", reportPath,
      ...morphArgs(options),
    ];
    if (options.trainPath !== undefined) args.push("--train", options.trainPath);
    runCli(args, options.cli);
    return JSON.parse(readFileSync(reportPath, "utf-8")) as StatsReport;
  });
}

/** Version string of the underlying CLI, e.g. "hantok 0.1.0". */
export function cliVersion(cli?: string): string {
  return runCli(["--version"], cli).trim();
}
