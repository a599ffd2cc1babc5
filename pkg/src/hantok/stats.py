"""Corpus diagnostics over tokenized text.

All rates are occurrence-based percentages: every token occurrence in the
test corpus counts once, whether or not its type repeats. The functions are
pure, so repeated runs on the same inputs are bit-identical.
"""

from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AlignmentError, ConfigError, DataError
from .hangul import is_syllable
from .markers import SPACE_MARKER, WORD_MARKER
from .vocab import Vocabulary


def oov_rate(vocab: Vocabulary, tokenized_test: Iterable[list[str]]) -> float:
    """Percentage of test-token occurrences whose type is not in the vocab."""
    total = 0
    oov = 0
    for tokens in tokenized_test:
        for token in tokens:
            total += 1
            if token not in vocab:
                oov += 1
    if total == 0:
        raise DataError("cannot compute OOV rate on an empty test corpus")
    return 100.0 * oov / total


def avg_len(tokenized_corpus: Iterable[list[str]]) -> float:
    """Mean number of tokens per sentence."""
    sentences = 0
    tokens = 0
    for sentence in tokenized_corpus:
        sentences += 1
        tokens += len(sentence)
    if sentences == 0:
        raise DataError("cannot average over an empty corpus")
    return tokens / sentences


def avg_syllables_per_token(tokenized_corpus: Iterable[list[str]]) -> float:
    """Mean count of Hangul syllable characters per token.

    ★ tokens are excluded outright; ▁ and ★ characters are stripped from the
    remaining tokens, which all count, even when nothing but punctuation or
    jamo is left (contributing zero syllables).
    """
    counted = 0
    syllables = 0
    for tokens in tokenized_corpus:
        for token in tokens:
            if token == SPACE_MARKER:
                continue
            body = token.replace(WORD_MARKER, "").replace(SPACE_MARKER, "")
            counted += 1
            syllables += sum(1 for ch in body if is_syllable(ch))
    if counted == 0:
        raise DataError("no countable tokens in corpus")
    return syllables / counted


def _strip_markers(token: str) -> str:
    return token.replace(WORD_MARKER, "")


def spanning_token_count(
    tokens: Sequence[str], morph_units: Sequence[str]
) -> tuple[int, int]:
    """Count tokens whose characters cross a morpheme boundary.

    Both views are reduced to the same space-free character stream: ★ units
    and ★ tokens drop out, ▁ prefixes are stripped. A token spans when its
    character interval overlaps at least two morpheme intervals. Returns
    (spanning count, total tokens considered).
    """
    morphemes = [unit for unit in morph_units if unit != SPACE_MARKER]
    morph_stream = "".join(morphemes)
    bodies = [_strip_markers(t) for t in tokens if t != SPACE_MARKER]
    token_stream = "".join(bodies)
    if token_stream != morph_stream:
        offset = 0
        limit = min(len(token_stream), len(morph_stream))
        while offset < limit and token_stream[offset] == morph_stream[offset]:
            offset += 1
        raise AlignmentError(
            "token characters do not match morpheme characters", offset
        )

    inner_starts: list[int] = []
    pos = 0
    for morpheme in morphemes[:-1]:
        pos += len(morpheme)
        inner_starts.append(pos)

    count = 0
    pos = 0
    for body in bodies:
        start, end = pos, pos + len(body)
        pos = end
        if bisect.bisect_left(inner_starts, end) > bisect.bisect_right(inner_starts, start):
            count += 1
    return count, len(tokens)


def boundary_spanning(
    tokens: Sequence[str], morph_units: Sequence[str]
) -> tuple[int, float]:
    """Sentence-level (count, percentage of all tokens) of boundary crossers."""
    count, total = spanning_token_count(tokens, morph_units)
    return count, (100.0 * count / total) if total else 0.0


def boundary_spanning_corpus(
    pairs: Iterable[tuple[Sequence[str], Sequence[str]]]
) -> tuple[int, float]:
    """Aggregate over (tokens, morph_units) sentence pairs."""
    count = 0
    total = 0
    for tokens, morph_units in pairs:
        sentence_count, sentence_total = spanning_token_count(tokens, morph_units)
        count += sentence_count
        total += sentence_total
    return count, (100.0 * count / total) if total else 0.0


def under_trained_curve(
    train_tokenized: Iterable[list[str]],
    test_tokenized: Iterable[list[str]],
    max_n: int = 100,
) -> list[float]:
    """Share of test occurrences with training frequency ≤ n, for n = 0..max_n.

    Index 0 is the out-of-training share (frequency exactly 0), so the curve
    starts at the OOV rate against the untruncated training inventory and is
    non-decreasing from there.
    """
    if max_n < 0:
        raise ConfigError(f"max_n must be non-negative, got {max_n}")
    train_freq: Counter[str] = Counter()
    for tokens in train_tokenized:
        train_freq.update(tokens)
    test_freq: Counter[str] = Counter()
    for tokens in test_tokenized:
        test_freq.update(tokens)
    total = sum(test_freq.values())
    if total == 0:
        raise DataError("cannot compute curve on an empty test corpus")

    buckets = [0] * (max_n + 2)
    for token, occurrences in test_freq.items():
        frequency = train_freq.get(token, 0)
        buckets[min(frequency, max_n + 1)] += occurrences
    curve: list[float] = []
    cumulative = 0
    for n in range(max_n + 1):
        cumulative += buckets[n]
        curve.append(100.0 * cumulative / total)
    return curve


@dataclass
class CorpusReport:
    """The diagnostics bundle emitted by the stats pipeline.

    ``boundary_spanning`` needs a morpheme view and ``under_trained_curve``
    needs a training-side corpus; either is None when its input is absent.
    """

    oov_rate: float
    avg_len: float
    avg_syllables_per_token: float
    boundary_spanning: tuple[int, float] | None
    under_trained_curve: list[float] | None

    def as_dict(self) -> dict:
        spanning = None
        if self.boundary_spanning is not None:
            count, percentage = self.boundary_spanning
            spanning = {"count": count, "percentage": percentage}
        return {
            "oov_rate": self.oov_rate,
            "avg_len": self.avg_len,
            "avg_syllables_per_token": self.avg_syllables_per_token,
            "boundary_spanning": spanning,
            "under_trained_curve": self.under_trained_curve,
        }
