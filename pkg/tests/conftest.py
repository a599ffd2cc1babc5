"""Shared fixtures: golden-sentence fixtures and the big desk corpus."""

from __future__ import annotations

import pytest

from hantok import (
    BpeModel,
    DictionaryAnalyzer,
    MorphDictionary,
    SPACE_MARKER,
    WORD_MARKER,
    build_vocab,
    create_strategy,
    normalize_text,
    train_bpe,
    vocab_from_pieces,
)
from hantok.vocab import SPECIAL_TOKENS

from corpora import DeskCorpus, build_desk_corpus

VOCAB_SIZES = (1000, 2000, 4000, 8000)
BPE_KINDS = ("subword", "morpheme-subword")

GOLDEN_SOURCE = "나랑 쇼핑하자."
GOLDEN_MORPHEMES = ("나", "랑", "쇼핑", "하", "자", ".")


@pytest.fixture(scope="session")
def golden_dictionary() -> MorphDictionary:
    return MorphDictionary.from_iterable(GOLDEN_MORPHEMES)


@pytest.fixture(scope="session")
def golden_analyzer(golden_dictionary) -> DictionaryAnalyzer:
    return DictionaryAnalyzer(golden_dictionary)


@pytest.fixture(scope="session")
def golden_subword_model() -> BpeModel:
    return BpeModel.from_merges(
        [(WORD_MARKER, "나"), (WORD_MARKER + "나", "랑"), (WORD_MARKER, "쇼"), ("핑", "하")],
        base_chars=[WORD_MARKER, "나", "랑", "쇼", "핑", "하", "자", "."],
    )


@pytest.fixture(scope="session")
def golden_mas_model() -> BpeModel:
    return BpeModel.from_merges(
        [
            (WORD_MARKER, "나"),
            (WORD_MARKER, "랑"),
            (WORD_MARKER, "쇼"),
            (WORD_MARKER, "하"),
            (WORD_MARKER, "자"),
            (WORD_MARKER, "."),
        ],
        base_chars=[WORD_MARKER, "나", "랑", "쇼", "핑", "하", "자", "."],
    )


def subword_word_counts(lines) -> dict[str, int]:
    counts: dict[str, int] = {}
    for line in lines:
        line = normalize_text(line)
        if not line:
            continue
        for word in line.split(" "):
            marked = WORD_MARKER + word
            counts[marked] = counts.get(marked, 0) + 1
    return counts


def mas_word_counts(lines, analyzer) -> dict[str, int]:
    counts: dict[str, int] = {}
    for line in lines:
        if not normalize_text(line):
            continue
        for unit in analyzer.segment(line).units:
            if unit == SPACE_MARKER:
                continue
            marked = WORD_MARKER + unit
            counts[marked] = counts.get(marked, 0) + 1
    return counts


@pytest.fixture(scope="session")
def desk() -> DeskCorpus:
    return build_desk_corpus()


@pytest.fixture(scope="session")
def desk_subword_models(desk) -> dict[int, BpeModel]:
    counts = subword_word_counts(desk.train)
    return {
        size: train_bpe(counts.items(), size - len(SPECIAL_TOKENS))
        for size in VOCAB_SIZES
    }


@pytest.fixture(scope="session")
def desk_mas_models(desk) -> dict[int, BpeModel]:
    counts = mas_word_counts(desk.train, desk.analyzer)
    return {
        size: train_bpe(counts.items(), size - len(SPECIAL_TOKENS))
        for size in VOCAB_SIZES
    }


class DeskView:
    """Memoized tokenizations, segmentations, and vocabularies of the desk corpus."""

    def __init__(self, desk, subword_models, mas_models):
        self.desk = desk
        self.subword_models = subword_models
        self.mas_models = mas_models
        self._tokens: dict = {}
        self._units: dict = {}
        self._vocabs: dict = {}

    def strategy(self, kind: str, size: int | None = None):
        if kind == "subword":
            return create_strategy(kind, bpe=self.subword_models[size])
        if kind == "morpheme-subword":
            return create_strategy(
                kind, bpe=self.mas_models[size], morph=self.desk.analyzer
            )
        return create_strategy(kind, morph=self.desk.analyzer)

    def tokens(self, split: str, kind: str, size: int | None = None) -> list[list[str]]:
        key = (split, kind, size if kind in BPE_KINDS else None)
        if key not in self._tokens:
            strategy = self.strategy(kind, size)
            lines = getattr(self.desk, split)
            self._tokens[key] = [strategy.tokenize(line) for line in lines]
        return self._tokens[key]

    def units(self, split: str) -> list[tuple[str, ...]]:
        if split not in self._units:
            lines = getattr(self.desk, split)
            self._units[split] = [
                self.desk.analyzer.segment(line).units for line in lines
            ]
        return self._units[split]

    def vocab(self, kind: str, size: int):
        key = (kind, size)
        if key not in self._vocabs:
            if kind == "subword":
                self._vocabs[key] = vocab_from_pieces(self.subword_models[size].pieces)
            elif kind == "morpheme-subword":
                self._vocabs[key] = vocab_from_pieces(self.mas_models[size].pieces)
            else:
                self._vocabs[key] = build_vocab(self.tokens("train", kind), size)
        return self._vocabs[key]


@pytest.fixture(scope="session")
def desk_view(desk, desk_subword_models, desk_mas_models) -> DeskView:
    return DeskView(desk, desk_subword_models, desk_mas_models)
