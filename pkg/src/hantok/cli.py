"""Command line front end: train, encode, decode, stats.

All file I/O is UTF-8 with \\n newlines and no BOM; reruns on identical
inputs produce byte-identical artifacts. Exit codes: 0 success, 1 bad data
(malformed model/token files, alignment failures), 2 bad usage or missing
files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .bpe import load_model, save_model, train_bpe
from .errors import ConfigError, DataError, ModelFormatError
from .markers import SPACE_MARKER, WORD_MARKER
from .morph import (
    CommandAnalyzer,
    DictionaryAnalyzer,
    MorphAnalyzer,
    MorphDictionary,
    WakatiTable,
    normalize_text,
)
from .stats import (
    CorpusReport,
    avg_len,
    avg_syllables_per_token,
    boundary_spanning_corpus,
    oov_rate,
    under_trained_curve,
)
from .strategies import STRATEGY_KINDS, Strategy, create_strategy, detokenize
from .vocab import (
    SPECIAL_TOKENS,
    VOCAB_FILENAME,
    build_vocab,
    load_vocab,
    save_vocab,
    vocab_from_pieces,
)

MORPH_KINDS = frozenset({"morpheme", "morpheme-subword"})
BPE_KINDS = frozenset({"subword", "morpheme-subword"})


def _read_lines(path: str | Path) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror or exc}") from None


def _write_lines(path: str | Path, lines: Sequence[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def _build_analyzer(args: argparse.Namespace) -> MorphAnalyzer | None:
    given = [
        name
        for name, value in (
            ("--morph-dict", args.morph_dict),
            ("--wakati", args.wakati),
            ("--morph-cmd", args.morph_cmd),
        )
        if value
    ]
    if len(given) > 1:
        raise ConfigError(f"{' and '.join(given)} are mutually exclusive")
    if args.morph_dict:
        return DictionaryAnalyzer(MorphDictionary.from_file(args.morph_dict))
    if args.wakati:
        sources: list[str] = []
        outputs: list[str] = []
        for lineno, line in enumerate(_read_lines(args.wakati), start=1):
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ModelFormatError(
                    "wakati line needs exactly one tab between source and "
                    "analyzer output",
                    lineno,
                )
            sources.append(fields[0])
            outputs.append(fields[1])
        return WakatiTable(sources, outputs)
    if args.morph_cmd:
        return CommandAnalyzer(args.morph_cmd)
    return None


def _build_strategy(args: argparse.Namespace) -> tuple[Strategy, MorphAnalyzer | None]:
    kind = args.strategy
    analyzer = _build_analyzer(args)
    if kind in MORPH_KINDS and analyzer is None:
        raise ConfigError(
            f"strategy {kind} requires one of --morph-dict, --wakati, --morph-cmd"
        )
    model = None
    if kind in BPE_KINDS:
        if not args.model:
            raise ConfigError(f"strategy {kind} requires --model")
        model = load_model(args.model)
    return create_strategy(kind, bpe=model, morph=analyzer), analyzer


def cmd_train(args: argparse.Namespace) -> int:
    kind = args.strategy
    analyzer = _build_analyzer(args)
    if kind in MORPH_KINDS and analyzer is None:
        raise ConfigError(
            f"strategy {kind} requires one of --morph-dict, --wakati, --morph-cmd"
        )
    lines = _read_lines(args.input)
    model_dir = Path(args.model)
    model_dir.mkdir(parents=True, exist_ok=True)

    if kind in BPE_KINDS:
        words: dict[str, int] = {}
        if kind == "subword":
            for line in lines:
                line = normalize_text(line)
                if not line:
                    continue
                for word in line.split(" "):
                    marked = WORD_MARKER + word
                    words[marked] = words.get(marked, 0) + 1
        else:
            for line in lines:
                if not normalize_text(line):
                    continue
                for unit in analyzer.segment(line).units:
                    if unit == SPACE_MARKER:
                        continue
                    marked = WORD_MARKER + unit
                    words[marked] = words.get(marked, 0) + 1
        budget = args.vocab_size - len(SPECIAL_TOKENS)
        model = train_bpe(words.items(), budget)
        save_model(model, model_dir)
        save_vocab(vocab_from_pieces(model.pieces), model_dir / VOCAB_FILENAME)
        print(f"pieces: {len(model.pieces)}")
        for rule in model.merges[:10]:
            print(f"merge {rule.rank}: {rule.left} + {rule.right}")
    else:
        strategy = create_strategy(kind, morph=analyzer)
        tokenized = [strategy.tokenize(line) for line in lines]
        vocab = build_vocab(tokenized, args.vocab_size)
        save_vocab(vocab, model_dir / VOCAB_FILENAME)
        print(f"vocab entries: {len(vocab)}")
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    strategy, _ = _build_strategy(args)
    lines = _read_lines(args.input)
    _write_lines(args.output, [" ".join(strategy.tokenize(line)) for line in lines])
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    kind = args.strategy
    out: list[str] = []
    for line in _read_lines(args.input):
        tokens = line.split(" ") if line else []
        out.append(detokenize(kind, tokens))
    _write_lines(args.output, out)
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    kind = args.strategy
    vocab = load_vocab(Path(args.model) / VOCAB_FILENAME)
    strategy, analyzer = _build_strategy(args)
    test_lines = _read_lines(args.input)
    test_tokenized = [strategy.tokenize(line) for line in test_lines]

    spanning = None
    if analyzer is not None and kind in BPE_KINDS:
        pairs = []
        for line, tokens in zip(test_lines, test_tokenized):
            if not normalize_text(line):
                continue
            pairs.append((tokens, analyzer.segment(line).units))
        spanning = boundary_spanning_corpus(pairs)

    curve = None
    if args.train:
        train_tokenized = [
            strategy.tokenize(line) for line in _read_lines(args.train)
        ]
        curve = under_trained_curve(train_tokenized, test_tokenized)
    elif args.curve_csv:
        raise ConfigError("--curve-csv requires --train")

    report = CorpusReport(
        oov_rate=oov_rate(vocab, test_tokenized),
        avg_len=avg_len(test_tokenized),
        avg_syllables_per_token=avg_syllables_per_token(test_tokenized),
        boundary_spanning=spanning,
        under_trained_curve=curve,
    )
    payload = {"strategy": kind, "vocab_size": len(vocab)}
    payload.update(report.as_dict())
    text = json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.curve_csv:
        rows = ["n,percentage"]
        rows.extend(f"{n},{value!r}" for n, value in enumerate(curve))
        _write_lines(args.curve_csv, rows)
    return 0


def _add_morph_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--morph-dict", metavar="PATH", help="morpheme dictionary, one entry per line"
    )
    parser.add_argument(
        "--wakati",
        metavar="PATH",
        help="precomputed analyzer output: source<TAB>space-separated morphemes",
    )
    parser.add_argument(
        "--morph-cmd",
        metavar="CMD",
        help="external analyzer command reading lines on stdin, "
        "writing wakati lines on stdout",
    )


def _add_strategy_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--strategy", required=True, choices=STRATEGY_KINDS, help="segmentation strategy"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hantok",
        description="Korean tokenization toolkit: six segmentation strategies "
        "with exact detokenization, BPE training, and corpus diagnostics.",
    )
    parser.add_argument("--version", action="version", version=f"hantok {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    train = sub.add_parser("train", help="train a model directory from a corpus")
    _add_strategy_flag(train)
    train.add_argument("--vocab-size", type=int, required=True, metavar="N")
    train.add_argument("--input", required=True, metavar="PATH")
    train.add_argument("--model", required=True, metavar="DIR")
    _add_morph_flags(train)
    train.set_defaults(func=cmd_train)

    encode = sub.add_parser("encode", help="tokenize a text file line by line")
    _add_strategy_flag(encode)
    encode.add_argument("--model", metavar="DIR")
    encode.add_argument("--input", required=True, metavar="PATH")
    encode.add_argument("--output", required=True, metavar="PATH")
    _add_morph_flags(encode)
    encode.set_defaults(func=cmd_encode)

    decode = sub.add_parser("decode", help="restore text from a token file")
    _add_strategy_flag(decode)
    decode.add_argument("--input", required=True, metavar="PATH")
    decode.add_argument("--output", required=True, metavar="PATH")
    decode.set_defaults(func=cmd_decode)

    stats = sub.add_parser("stats", help="corpus diagnostics against a model")
    _add_strategy_flag(stats)
    stats.add_argument("--model", required=True, metavar="DIR")
    stats.add_argument("--input", required=True, metavar="PATH")
    stats.add_argument(
        "--train",
        metavar="PATH",
        help="training-side corpus; enables the under-trained token curve",
    )
    stats.add_argument("--report", metavar="PATH", help="report file (default stdout)")
    stats.add_argument(
        "--curve-csv", metavar="PATH", help="also write the curve as n,percentage rows"
    )
    _add_morph_flags(stats)
    stats.set_defaults(func=cmd_stats)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"hantok: error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"hantok: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"hantok: error: {exc}", file=sys.stderr)
        return 2
