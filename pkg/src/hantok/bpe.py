"""Byte pair encoding: training, encoding and model files.

Training greedily merges the most frequent adjacent symbol pair inside words
(never across a word boundary) until the piece inventory reaches the target
size or no pair occurs at least twice. Ties on frequency are broken by taking
the lexicographically greatest (left, right) pair, which keeps training fully
deterministic. Encoding replays the merges in rank order, so encoding a
training word always reproduces the symbols training left it with.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import ConfigError, ModelFormatError

MERGES_FILENAME = "merges.txt"
PIECES_FILENAME = "pieces.txt"


@dataclass(frozen=True)
class MergeRule:
    left: str
    right: str
    rank: int


class _RevPair:
    """Orders pairs reverse-lexicographically so a min-heap pops the max."""

    __slots__ = ("pair",)

    def __init__(self, pair: tuple[str, str]):
        self.pair = pair

    def __lt__(self, other: "_RevPair") -> bool:
        return self.pair > other.pair

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _RevPair) and self.pair == other.pair


def _merge_pass(symbols: list[str], left: str, right: str) -> list[str]:
    """Replace every non-overlapping (left, right) occurrence, leftmost first."""
    out: list[str] = []
    i = 0
    n = len(symbols)
    while i < n:
        if i + 1 < n and symbols[i] == left and symbols[i + 1] == right:
            out.append(left + right)
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return out


class BpeModel:
    """An ordered merge list plus the piece inventory it produces.

    ``pieces`` maps each piece (base characters and merge outputs, in
    creation order) to its frequency in the training corpus; fully absorbed
    base characters keep frequency 0. Models are immutable after
    construction; the encode cache only memoizes results.
    """

    def __init__(
        self,
        merges: list[MergeRule],
        pieces: dict[str, int],
        vocab_size_target: int,
    ):
        self.merges = list(merges)
        self.pieces = dict(pieces)
        self.vocab_size_target = vocab_size_target
        self._ranks = {(rule.left, rule.right): rule.rank for rule in self.merges}
        self._cache: dict[str, tuple[str, ...]] = {}

    @classmethod
    def from_merges(
        cls,
        pairs: Iterable[tuple[str, str]],
        base_chars: Iterable[str],
        piece_freqs: Mapping[str, int] | None = None,
    ) -> "BpeModel":
        """Build a model from explicit merges, mainly for fixtures and tests."""
        pieces: dict[str, int] = {}
        for ch in base_chars:
            pieces.setdefault(ch, 0)
        merges = [MergeRule(left, right, rank) for rank, (left, right) in enumerate(pairs)]
        for rule in merges:
            pieces.setdefault(rule.left + rule.right, 0)
        if piece_freqs:
            for piece, freq in piece_freqs.items():
                pieces[piece] = freq
        return cls(merges, pieces, vocab_size_target=len(pieces))

    def __contains__(self, piece: str) -> bool:
        return piece in self.pieces

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BpeModel):
            return NotImplemented
        return self.merges == other.merges and self.pieces == other.pieces

    def encode(self, word: str) -> list[str]:
        """Split a word into pieces by applying merges in rank order.

        The lowest-rank applicable merge is applied to all its occurrences,
        leftmost first, until none applies. Pieces always concatenate back to
        the input; characters the model has never seen simply stay single
        (and will miss the piece inventory, which downstream id mapping
        treats as unknown).
        """
        cached = self._cache.get(word)
        if cached is None:
            symbols = list(word)
            while len(symbols) > 1:
                best_rank: int | None = None
                for pair in zip(symbols, symbols[1:]):
                    rank = self._ranks.get(pair)
                    if rank is not None and (best_rank is None or rank < best_rank):
                        best_rank = rank
                if best_rank is None:
                    break
                rule = self.merges[best_rank]
                symbols = _merge_pass(symbols, rule.left, rule.right)
            cached = self._cache[word] = tuple(symbols)
        return list(cached)


def encode_word(word: str, model: BpeModel) -> list[str]:
    return model.encode(word)


def train_bpe(words: Iterable[tuple[str, int]], vocab_size: int) -> BpeModel:
    """Learn a BPE model from a multiset of words.

    ``words`` yields (word, count) with any word boundary marking already
    applied by the caller. Merging stops when the piece inventory reaches
    ``vocab_size`` or when no adjacent pair occurs at least twice.
    """
    word_symbols: list[list[str]] = []
    word_counts: list[int] = []
    index_of: dict[str, int] = {}
    pieces: dict[str, int] = {}
    for word, count in words:
        if count < 1:
            raise ConfigError(f"word count must be positive: {word!r} x {count}")
        at = index_of.get(word)
        if at is None:
            index_of[word] = len(word_symbols)
            word_symbols.append(list(word))
            word_counts.append(count)
            for ch in word:
                pieces.setdefault(ch, 0)
        else:
            word_counts[at] += count

    if vocab_size <= len(pieces):
        raise ConfigError(
            f"vocab size {vocab_size} does not exceed the "
            f"{len(pieces)} distinct base characters"
        )

    pair_counts: dict[tuple[str, str], int] = {}
    pair_words: dict[tuple[str, str], set[int]] = {}
    for wi, (symbols, count) in enumerate(zip(word_symbols, word_counts)):
        for pair in zip(symbols, symbols[1:]):
            pair_counts[pair] = pair_counts.get(pair, 0) + count
            pair_words.setdefault(pair, set()).add(wi)

    # Lazy max-heap over (count, pair); stale entries are skipped on pop.
    heap: list[tuple[int, _RevPair, tuple[str, str]]] = [
        (-count, _RevPair(pair), pair)
        for pair, count in pair_counts.items()
        if count >= 2
    ]
    heapq.heapify(heap)

    def pop_best() -> tuple[str, str] | None:
        while heap:
            neg_count, _, pair = heapq.heappop(heap)
            if pair_counts.get(pair, 0) == -neg_count:
                return pair
        return None

    merges: list[MergeRule] = []
    while len(pieces) < vocab_size:
        best = pop_best()
        if best is None:
            break
        left, right = best
        merges.append(MergeRule(left, right, len(merges)))
        pieces.setdefault(left + right, 0)

        touched: set[tuple[str, str]] = set()
        for wi in sorted(pair_words.get(best, ())):
            old = word_symbols[wi]
            new = _merge_pass(old, left, right)
            count = word_counts[wi]
            for pair in zip(old, old[1:]):
                pair_counts[pair] -= count
                touched.add(pair)
            for pair in zip(new, new[1:]):
                pair_counts[pair] = pair_counts.get(pair, 0) + count
                touched.add(pair)
            old_set = set(zip(old, old[1:]))
            new_set = set(zip(new, new[1:]))
            for pair in old_set - new_set:
                pair_words[pair].discard(wi)
            for pair in new_set - old_set:
                pair_words.setdefault(pair, set()).add(wi)
            word_symbols[wi] = new
        for pair in touched:
            count = pair_counts.get(pair, 0)
            if count >= 2:
                heapq.heappush(heap, (-count, _RevPair(pair), pair))
            elif count <= 0:
                pair_counts.pop(pair, None)
                pair_words.pop(pair, None)

    for symbols, count in zip(word_symbols, word_counts):
        for symbol in symbols:
            pieces[symbol] += count
    return BpeModel(merges, pieces, vocab_size_target=vocab_size)


def save_model(model: BpeModel, directory: str | Path) -> None:
    """Write merges and pieces files; line order carries rank and creation order."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    with open(directory / MERGES_FILENAME, "w", encoding="utf-8", newline="\n") as fh:
        for rule in model.merges:
            fh.write(f"{rule.left} {rule.right}\n")
    with open(directory / PIECES_FILENAME, "w", encoding="utf-8", newline="\n") as fh:
        for piece, freq in model.pieces.items():
            fh.write(f"{piece}\t{freq}\n")


def load_model(directory: str | Path) -> BpeModel:
    """Read a model back; validates formats and the merge closure property."""
    directory = Path(directory)
    merges_path = directory / MERGES_FILENAME
    pieces_path = directory / PIECES_FILENAME

    pieces: dict[str, int] = {}
    with open(pieces_path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0]:
                raise ModelFormatError(f"malformed pieces line {line!r}", lineno)
            piece, freq_text = fields
            try:
                freq = int(freq_text)
            except ValueError:
                raise ModelFormatError(
                    f"piece frequency is not an integer: {freq_text!r}", lineno
                ) from None
            if freq < 0:
                raise ModelFormatError(f"negative piece frequency: {freq}", lineno)
            if piece in pieces:
                raise ModelFormatError(f"duplicate piece {piece!r}", lineno)
            pieces[piece] = freq

    merges: list[MergeRule] = []
    seen_pairs: set[tuple[str, str]] = set()
    producible = {piece for piece in pieces if len(piece) == 1}
    expected_outputs: set[str] = set()
    with open(merges_path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            fields = line.split(" ")
            if len(fields) != 2 or not fields[0] or not fields[1]:
                raise ModelFormatError(f"malformed merges line {line!r}", lineno)
            left, right = fields
            if (left, right) in seen_pairs:
                raise ModelFormatError(
                    f"duplicate merge {left!r} + {right!r}", lineno
                )
            seen_pairs.add((left, right))
            for operand in (left, right):
                if operand not in producible:
                    raise ModelFormatError(
                        f"merge operand {operand!r} is neither a base character "
                        "nor an earlier merge output",
                        lineno,
                    )
            output = left + right
            if output not in pieces:
                raise ModelFormatError(
                    f"merge output {output!r} missing from pieces file", lineno
                )
            merges.append(MergeRule(left, right, len(merges)))
            producible.add(output)
            expected_outputs.add(output)

    for lineno, piece in enumerate(pieces, start=1):
        if len(piece) > 1 and piece not in expected_outputs:
            raise ModelFormatError(
                f"piece {piece!r} is not produced by any merge", lineno
            )
    return BpeModel(merges, pieces, vocab_size_target=len(pieces))
