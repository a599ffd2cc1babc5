"""Six segmentation strategies over Korean text, with exact detokenizers.

Granularities, coarse to fine: word, morpheme, subword (plain and
morpheme-aware), syllable, and consonant/vowel (jamo). Every strategy
normalizes whitespace first and emits tokens that never contain a literal
space. All strategies except word-level are lossless: detokenize recovers
the normalized input exactly. Spaces are carried either by the ★ token
(cv, syllable, morpheme, morpheme-subword) or by the ▁ word prefix
(subword).
"""

from __future__ import annotations

import unicodedata
from typing import Iterable

from .bpe import BpeModel
from .errors import ConfigError, TokenStructureError
from .hangul import compose_jamo_stream, decompose_text
from .markers import SPACE_MARKER, WORD_MARKER
from .morph import MorphAnalyzer, normalize_text

STRATEGY_KINDS = (
    "cv",
    "syllable",
    "morpheme",
    "subword",
    "morpheme-subword",
    "word",
)


def _check_space_markers(tokens: list[str]) -> None:
    """★ must be a standalone token and sit strictly between other tokens."""
    for i, token in enumerate(tokens):
        if not token:
            raise TokenStructureError("empty token")
        if SPACE_MARKER in token and token != SPACE_MARKER:
            raise TokenStructureError(f"{SPACE_MARKER} inside token body: {token!r}")
        if token == SPACE_MARKER:
            if i == 0:
                raise TokenStructureError(f"leading {SPACE_MARKER} token")
            if i == len(tokens) - 1:
                raise TokenStructureError(f"trailing {SPACE_MARKER} token")
            if tokens[i - 1] == SPACE_MARKER:
                raise TokenStructureError(f"adjacent {SPACE_MARKER} tokens")


def _check_word_markers(tokens: list[str]) -> None:
    """▁ may only start a token, never appear later in its body."""
    for token in tokens:
        if not token:
            raise TokenStructureError("empty token")
        if WORD_MARKER in token[1:]:
            raise TokenStructureError(f"{WORD_MARKER} inside token body: {token!r}")


class Strategy:
    """Common interface: tokenize a sentence, detokenize a token list."""

    kind: str

    def tokenize(self, text: str) -> list[str]:
        raise NotImplementedError

    def detokenize(self, tokens: list[str]) -> str:
        raise NotImplementedError

    def tokenize_lines(self, lines: Iterable[str]) -> list[list[str]]:
        return [self.tokenize(line) for line in lines]


class CvStrategy(Strategy):
    """Consonant/vowel level: each syllable becomes its two or three jamo."""

    kind = "cv"

    def tokenize(self, text: str) -> list[str]:
        text = normalize_text(text)
        tokens: list[str] = []
        for ch in decompose_text(text):
            tokens.append(SPACE_MARKER if ch == " " else ch)
        return tokens

    @staticmethod
    def detokenize(tokens: list[str]) -> str:
        _check_space_markers(tokens)
        return compose_jamo_stream(tokens)


class SyllableStrategy(Strategy):
    kind = "syllable"

    def tokenize(self, text: str) -> list[str]:
        text = normalize_text(text)
        return [SPACE_MARKER if ch == " " else ch for ch in text]

    @staticmethod
    def detokenize(tokens: list[str]) -> str:
        _check_space_markers(tokens)
        return "".join(tokens).replace(SPACE_MARKER, " ")


class MorphemeStrategy(Strategy):
    """Morpheme units verbatim, with ★ marking each original space."""

    kind = "morpheme"

    def __init__(self, analyzer: MorphAnalyzer):
        if analyzer is None:
            raise ConfigError("morpheme strategy requires a morpheme analyzer")
        self.analyzer = analyzer

    def tokenize(self, text: str) -> list[str]:
        if not normalize_text(text):
            return []
        return list(self.analyzer.segment(text).units)

    @staticmethod
    def detokenize(tokens: list[str]) -> str:
        _check_space_markers(tokens)
        return "".join(tokens).replace(SPACE_MARKER, " ")


class SubwordStrategy(Strategy):
    """BPE over whole words; ▁ marks word starts and carries the spaces."""

    kind = "subword"

    def __init__(self, model: BpeModel):
        if model is None:
            raise ConfigError("subword strategy requires a BPE model")
        self.model = model

    def tokenize(self, text: str) -> list[str]:
        text = normalize_text(text)
        if not text:
            return []
        tokens: list[str] = []
        for word in text.split(" "):
            tokens.extend(self.model.encode(WORD_MARKER + word))
        return tokens

    @staticmethod
    def detokenize(tokens: list[str]) -> str:
        _check_word_markers(tokens)
        text = "".join(tokens).replace(WORD_MARKER, " ")
        if text.startswith(" "):
            text = text[1:]
        return text


class MorphemeAwareSubwordStrategy(Strategy):
    """BPE inside morphemes: every morpheme gets ▁, spaces stay ★ tokens.

    Because encoding runs per morpheme, no token can straddle a morpheme
    boundary, and deleting ▁ at detokenization is unambiguous.
    """

    kind = "morpheme-subword"

    def __init__(self, analyzer: MorphAnalyzer, model: BpeModel):
        if analyzer is None:
            raise ConfigError("morpheme-subword strategy requires a morpheme analyzer")
        if model is None:
            raise ConfigError("morpheme-subword strategy requires a BPE model")
        self.analyzer = analyzer
        self.model = model

    def tokenize(self, text: str) -> list[str]:
        if not normalize_text(text):
            return []
        tokens: list[str] = []
        for unit in self.analyzer.segment(text).units:
            if unit == SPACE_MARKER:
                tokens.append(SPACE_MARKER)
            else:
                tokens.extend(self.model.encode(WORD_MARKER + unit))
        return tokens

    @staticmethod
    def detokenize(tokens: list[str]) -> str:
        _check_space_markers(tokens)
        _check_word_markers(tokens)
        joined = "".join(tokens)
        return joined.replace(WORD_MARKER, "").replace(SPACE_MARKER, " ")


def _is_punctuation(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


class WordStrategy(Strategy):
    """Whitespace words, with edge punctuation runs split off.

    Only leading and trailing punctuation detaches (one token per run);
    interior punctuation such as hyphens stays inside the word. The inverse
    direction is best effort: spacing around punctuation is not recoverable,
    so detokenize reattaches punctuation-only tokens to the preceding token
    and joins the rest with single spaces.
    """

    kind = "word"

    def tokenize(self, text: str) -> list[str]:
        tokens: list[str] = []
        for chunk in normalize_text(text).split():
            start, end = 0, len(chunk)
            while start < end and _is_punctuation(chunk[start]):
                start += 1
            while end > start and _is_punctuation(chunk[end - 1]):
                end -= 1
            if start > 0:
                tokens.append(chunk[:start])
            if end > start:
                tokens.append(chunk[start:end])
            if end < len(chunk):
                tokens.append(chunk[end:])
        return tokens

    @staticmethod
    def detokenize(tokens: list[str]) -> str:
        words: list[str] = []
        for token in tokens:
            if not token:
                raise TokenStructureError("empty token")
            if words and all(_is_punctuation(ch) for ch in token):
                words[-1] += token
            else:
                words.append(token)
        return " ".join(words)


_STRATEGY_CLASSES = {
    CvStrategy.kind: CvStrategy,
    SyllableStrategy.kind: SyllableStrategy,
    MorphemeStrategy.kind: MorphemeStrategy,
    SubwordStrategy.kind: SubwordStrategy,
    MorphemeAwareSubwordStrategy.kind: MorphemeAwareSubwordStrategy,
    WordStrategy.kind: WordStrategy,
}


def detokenize(kind: str, tokens: list[str]) -> str:
    """Detokenize without constructing a strategy; kind alone determines it."""
    cls = _STRATEGY_CLASSES.get(kind)
    if cls is None:
        raise ConfigError(f"unknown strategy kind: {kind!r}")
    return cls.detokenize(tokens)


def create_strategy(
    kind: str,
    bpe: BpeModel | None = None,
    morph: MorphAnalyzer | None = None,
) -> Strategy:
    """Instantiate a strategy by kind name, checking required components."""
    if kind == "cv":
        return CvStrategy()
    if kind == "syllable":
        return SyllableStrategy()
    if kind == "morpheme":
        return MorphemeStrategy(morph)
    if kind == "subword":
        return SubwordStrategy(bpe)
    if kind == "morpheme-subword":
        return MorphemeAwareSubwordStrategy(morph, bpe)
    if kind == "word":
        return WordStrategy()
    raise ConfigError(f"unknown strategy kind: {kind!r}")
