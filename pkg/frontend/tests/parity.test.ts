import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import {
  HantokCliError,
  Strategy,
  Tokenizer,
  TokenizerOptions,
  cliVersion,
  stats,
  train,
} from "../src/index.js";

// Deterministic 32-bit PRNG so the corpus is identical on every run.
function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ASCII = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
const PUNCT = ".,!?";

function randomSentences(seed: number, count: number): string[] {
  const rand = mulberry32(seed);
  const pick = (n: number) => Math.floor(rand() * n);
  const pool: string[] = [];
  while (pool.length < 300) {
    pool.push(String.fromCharCode(0xac00 + pick(11172)));
  }
  const randomChar = () => {
    const roll = rand();
    if (roll < 0.7) return pool[pick(pool.length)];
    if (roll < 0.9) return ASCII[pick(ASCII.length)];
    return PUNCT[pick(PUNCT.length)];
  };
  const sentences: string[] = [];
  for (let i = 0; i < count; i++) {
    const words: string[] = [];
    const wordCount = 1 + pick(9);
    for (let w = 0; w < wordCount; w++) {
      let word = "";
      const len = 1 + pick(8);
      for (let c = 0; c < len; c++) word += randomChar();
      words.push(word);
    }
    sentences.push(words.join(" "));
  }
  return sentences;
}

function runCliDirect(args: string[]): void {
  const proc = spawnSync("hantok", args, { encoding: "utf-8" });
  expect(proc.error).toBeUndefined();
  expect(proc.status, proc.stderr).toBe(0);
}

const workspace = mkdtempSync(join(tmpdir(), "hantok-parity-"));
const corpusPath = join(workspace, "corpus.txt");
const dictPath = join(workspace, "dict.txt");
const subwordModel = join(workspace, "subword-model");
const masModel = join(workspace, "mas-model");
const corpus = randomSentences(20260814, 1000);

const REVERSIBLE: Strategy[] = [
  "cv",
  "syllable",
  "morpheme",
  "subword",
  "morpheme-subword",
];

function optionsFor(strategy: Strategy): TokenizerOptions {
  const options: TokenizerOptions = {};
  if (strategy === "morpheme" || strategy === "morpheme-subword") {
    options.morphDict = dictPath;
  }
  if (strategy === "subword") options.model = subwordModel;
  if (strategy === "morpheme-subword") options.model = masModel;
  return options;
}

beforeAll(() => {
  writeFileSync(corpusPath, corpus.map((s) => s + "\n").join(""), "utf-8");

  // Dictionary of frequent bigrams; unlisted characters fall back to
  // single-character morphemes, so coverage does not need to be total.
  const bigrams = new Set<string>();
  for (const sentence of corpus) {
    for (const word of sentence.split(" ")) {
      for (let i = 0; i + 2 <= word.length && bigrams.size < 200; i += 2) {
        bigrams.add(word.slice(i, i + 2));
      }
    }
  }
  writeFileSync(dictPath, [...bigrams].map((b) => b + "\n").join(""), "utf-8");

  train({
    strategy: "subword",
    vocabSize: 600,
    corpusPath,
    modelDir: subwordModel,
  });
  train({
    strategy: "morpheme-subword",
    vocabSize: 600,
    corpusPath,
    modelDir: masModel,
    morphDict: dictPath,
  });
}, 60_000);

afterAll(() => {
  rmSync(workspace, { recursive: true, force: true });
});

describe("binding output matches CLI encode byte for byte", () => {
  const strategies: Strategy[] = [...REVERSIBLE, "word"];
  for (const strategy of strategies) {
    it(strategy, () => {
      const options = optionsFor(strategy);
      const tokenizer = new Tokenizer(strategy, options);
      const tokenLines = tokenizer.tokenizeLines(corpus);

      const outputPath = join(workspace, `${strategy}.tok`);
      const args = ["encode", "--strategy", strategy, "--input", corpusPath,
        "--output", outputPath];
      if (options.model) args.push("--model", options.model);
      if (options.morphDict) args.push("--morph-dict", options.morphDict);
      runCliDirect(args);

      const rejoined = tokenLines.map((tokens) => tokens.join(" ") + "\n").join("");
      expect(rejoined).toBe(readFileSync(outputPath, "utf-8"));
    }, 30_000);
  }
});

describe("detokenization", () => {
  for (const strategy of REVERSIBLE) {
    it(`${strategy} round-trips the corpus`, () => {
      const tokenizer = new Tokenizer(strategy, optionsFor(strategy));
      const decoded = tokenizer.detokenizeLines(tokenizer.tokenizeLines(corpus));
      expect(decoded).toEqual(corpus);
    }, 30_000);
  }
});

describe("edge cases", () => {
  it("empty string tokenizes to an empty token list", () => {
    const tokenizer = new Tokenizer("syllable");
    expect(tokenizer.tokenize("")).toEqual([]);
    expect(tokenizer.detokenize([])).toBe("");
  });

  it("empty batch yields an empty batch", () => {
    expect(new Tokenizer("word").tokenizeLines([])).toEqual([]);
  });

  it("single tokenize matches batch element", () => {
    const tokenizer = new Tokenizer("subword", { model: subwordModel });
    expect(tokenizer.tokenize(corpus[0])).toEqual(
      tokenizer.tokenizeLines(corpus)[0],
    );
  }, 30_000);
});

describe("stats and errors", () => {
  it("returns a typed report", () => {
    const report = stats({
      strategy: "subword",
      model: subwordModel,
      inputPath: corpusPath,
      trainPath: corpusPath,
      morphDict: dictPath,
    });
    expect(report.strategy).toBe("subword");
    expect(report.vocab_size).toBeGreaterThan(5);
    expect(report.oov_rate).toBeGreaterThanOrEqual(0);
    expect(report.avg_len).toBeGreaterThan(0);
    expect(report.boundary_spanning?.count).toBeGreaterThanOrEqual(0);
    expect(report.under_trained_curve).toHaveLength(101);
  }, 30_000);

  it("surfaces CLI failures with exit code and stderr", () => {
    const tokenizer = new Tokenizer("subword", {
      model: join(workspace, "no-such-model"),
    });
    try {
      tokenizer.tokenize("가나다");
      expect.unreachable("expected a CLI error");
    } catch (error) {
      expect(error).toBeInstanceOf(HantokCliError);
      expect((error as HantokCliError).exitCode).toBe(2);
      expect((error as HantokCliError).stderr).toContain("hantok: error");
    }
  });

  it("reports the CLI version", () => {
    expect(cliVersion()).toMatch(/^hantok \d+\.\d+\.\d+$/);
  });
});
