"""Token/id vocabularies with reserved specials and UNK fallback.

Ids are dense and 0-based; the five specials always occupy ids 0..4 and are
stored with frequency 0. Regular entries carry their training frequency.
The vocab file is one ``token<TAB>frequency`` line per id, so line order is
the id assignment and rewriting a loaded vocabulary is byte-identical.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping

from .errors import ConfigError, DataError, ModelFormatError, VocabRangeError
from .markers import SPACE_MARKER

PAD_TOKEN = "<pad>"
UNK_TOKEN = "<unk>"
BOS_TOKEN = "<bos>"
EOS_TOKEN = "<eos>"

SPECIAL_TOKENS = (PAD_TOKEN, UNK_TOKEN, BOS_TOKEN, EOS_TOKEN, SPACE_MARKER)

PAD_ID = 0
UNK_ID = 1
BOS_ID = 2
EOS_ID = 3
SPACE_ID = 4

VOCAB_FILENAME = "vocab.txt"


class Vocabulary:
    """Immutable ordered token inventory; index in ``entries`` is the id."""

    def __init__(self, entries: Iterable[tuple[str, int]]):
        self.entries: tuple[tuple[str, int], ...] = tuple(entries)
        self._ids: dict[str, int] = {}
        for token_id, (token, freq) in enumerate(self.entries):
            if not token:
                raise ConfigError("empty token in vocabulary")
            if token in self._ids:
                raise ConfigError(f"duplicate token in vocabulary: {token!r}")
            if freq < 0:
                raise ConfigError(f"negative frequency for {token!r}")
            self._ids[token] = token_id
        if self.entries[: len(SPECIAL_TOKENS)] != tuple(
            (token, 0) for token in SPECIAL_TOKENS
        ):
            raise ConfigError(
                "vocabulary must start with the special tokens "
                + ", ".join(SPECIAL_TOKENS)
            )

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, token: str) -> bool:
        return token in self._ids

    def id_of(self, token: str) -> int:
        return self._ids.get(token, UNK_ID)

    def token_of(self, token_id: int) -> str:
        if not 0 <= token_id < len(self.entries):
            raise VocabRangeError(
                f"id {token_id} out of range for vocabulary of {len(self.entries)}"
            )
        return self.entries[token_id][0]

    def frequency_of(self, token: str) -> int:
        """Stored training frequency; 0 for tokens outside the vocabulary."""
        token_id = self._ids.get(token)
        if token_id is None:
            return 0
        return self.entries[token_id][1]


def build_vocab(
    tokenized_corpus: Iterable[list[str]], target_size: int
) -> Vocabulary:
    """Keep the most frequent tokens under the target, after the specials.

    Ties on frequency fall back to first occurrence order in the corpus,
    so builds do not depend on hash ordering. Tokens equal to a special
    string are never counted twice; they already hold a reserved id.
    """
    if target_size <= len(SPECIAL_TOKENS):
        raise ConfigError(
            f"target size {target_size} leaves no room beyond the "
            f"{len(SPECIAL_TOKENS)} special tokens"
        )
    counts: dict[str, int] = {}
    special_set = set(SPECIAL_TOKENS)
    for tokens in tokenized_corpus:
        for token in tokens:
            if token in special_set:
                continue
            counts[token] = counts.get(token, 0) + 1
    order = {token: position for position, token in enumerate(counts)}
    ranked = sorted(counts, key=lambda token: (-counts[token], order[token]))
    budget = target_size - len(SPECIAL_TOKENS)
    entries = [(token, 0) for token in SPECIAL_TOKENS]
    entries.extend((token, counts[token]) for token in ranked[:budget])
    return Vocabulary(entries)


def vocab_from_pieces(pieces: Mapping[str, int]) -> Vocabulary:
    """Vocabulary over a BPE piece inventory, in piece creation order.

    Every piece keeps its id even at frequency 0: a fully absorbed base
    character can still surface when encoding unseen words, and it must not
    fall to UNK just because training always merged it away.
    """
    entries = [(token, 0) for token in SPECIAL_TOKENS]
    for piece, freq in pieces.items():
        if piece in SPECIAL_TOKENS:
            raise ConfigError(f"piece collides with special token: {piece!r}")
        entries.append((piece, freq))
    return Vocabulary(entries)


def encode_ids(vocab: Vocabulary, tokens: Iterable[str]) -> list[int]:
    return [vocab.id_of(token) for token in tokens]


def decode_ids(vocab: Vocabulary, ids: Iterable[int]) -> list[str]:
    return [vocab.token_of(token_id) for token_id in ids]


def save_vocab(vocab: Vocabulary, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for token, freq in vocab.entries:
            fh.write(f"{token}\t{freq}\n")


def load_vocab(path: str | Path) -> Vocabulary:
    entries: list[tuple[str, int]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0]:
                raise ModelFormatError(f"malformed vocab line {line!r}", lineno)
            try:
                freq = int(fields[1])
            except ValueError:
                raise ModelFormatError(
                    f"vocab frequency is not an integer: {fields[1]!r}", lineno
                ) from None
            entries.append((fields[0], freq))
    try:
        return Vocabulary(entries)
    except ConfigError as exc:
        # Structural problems in a file on disk are data, not configuration.
        raise DataError(str(exc)) from None
