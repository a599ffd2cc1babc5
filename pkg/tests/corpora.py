"""Deterministic synthetic corpora for the test suite.

Everything is seeded; the same calls always produce the same corpora. The
desk corpus imitates the shape of Korean news text: a Zipf-distributed
morpheme inventory over a small syllable pool, words of one to three
morphemes, occasional trailing punctuation. Its whole train/dev/test
character inventory comes from the training slice on purpose, so subword
models cover the test set completely and out-of-vocabulary behaviour is
driven by whole units, not stray characters.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from hantok import DictionaryAnalyzer, MorphDictionary

SYLLABLE_FIRST = 0xAC00
SYLLABLE_LAST = 0xD7A3

DESK_SEED = 20260814
POOL_SIZE = 180
MORPHEME_COUNT = 12000
SENTENCE_COUNT = 10000
PUNCTUATION = (".", ",", "!", "?")


def syllable_pool(rng: random.Random, size: int) -> list[str]:
    codes = rng.sample(range(SYLLABLE_FIRST, SYLLABLE_LAST + 1), size)
    return [chr(code) for code in codes]


def morpheme_inventory(rng: random.Random, pool: list[str], count: int) -> list[str]:
    lengths = [1, 2, 3]
    weights = [0.35, 0.45, 0.20]
    inventory: list[str] = []
    seen: set[str] = set()
    while len(inventory) < count:
        length = rng.choices(lengths, weights)[0]
        morpheme = "".join(rng.choice(pool) for _ in range(length))
        if morpheme not in seen:
            seen.add(morpheme)
            inventory.append(morpheme)
    return inventory


@dataclass
class DeskCorpus:
    """10K generated sentences with a 98/1/1 split and their analyzer."""

    sentences: list[str]
    dictionary: MorphDictionary
    analyzer: DictionaryAnalyzer

    @property
    def train(self) -> list[str]:
        return self.sentences[: len(self.sentences) * 98 // 100]

    @property
    def dev(self) -> list[str]:
        n = len(self.sentences)
        return self.sentences[n * 98 // 100 : n * 99 // 100]

    @property
    def test(self) -> list[str]:
        return self.sentences[len(self.sentences) * 99 // 100 :]


def build_desk_corpus(
    seed: int = DESK_SEED,
    sentence_count: int = SENTENCE_COUNT,
) -> DeskCorpus:
    rng = random.Random(seed)
    pool = syllable_pool(rng, POOL_SIZE)
    inventory = morpheme_inventory(rng, pool, MORPHEME_COUNT)

    # Zipf-like weights over the inventory, precomputed cumulatively.
    cum_weights: list[float] = []
    total = 0.0
    for rank in range(len(inventory)):
        total += 1.0 / (rank + 2) ** 1.05
        cum_weights.append(total)

    def pick_morpheme() -> str:
        return rng.choices(inventory, cum_weights=cum_weights)[0]

    sentences: list[str] = []
    for _ in range(sentence_count):
        words: list[str] = []
        for _ in range(rng.randint(4, 10)):
            n = rng.choices([1, 2, 3], [0.50, 0.35, 0.15])[0]
            words.append("".join(pick_morpheme() for _ in range(n)))
        if rng.random() < 0.25:
            words[-1] += rng.choice(PUNCTUATION)
        sentences.append(" ".join(words))

    dictionary = MorphDictionary.from_iterable(list(inventory) + list(PUNCTUATION))
    corpus = DeskCorpus(
        sentences=sentences,
        dictionary=dictionary,
        analyzer=DictionaryAnalyzer(dictionary),
    )

    train_chars = set("".join(corpus.train))
    rest_chars = set("".join(corpus.dev + corpus.test))
    if not rest_chars <= train_chars:
        raise AssertionError(
            "desk corpus seed leaves dev/test characters uncovered: "
            f"{sorted(rest_chars - train_chars)}"
        )
    return corpus


def random_sentences(seed: int, count: int) -> list[str]:
    """Normalized sentences over Hangul syllables, ASCII, and punctuation."""
    rng = random.Random(seed)
    ascii_chars = string.ascii_letters + string.digits
    punct = ".,!?()-:;'\""

    def random_char() -> str:
        roll = rng.random()
        if roll < 0.70:
            return chr(rng.randrange(SYLLABLE_FIRST, SYLLABLE_LAST + 1))
        if roll < 0.90:
            return rng.choice(ascii_chars)
        return rng.choice(punct)

    sentences = []
    for _ in range(count):
        words = []
        for _ in range(rng.randint(1, 9)):
            words.append(
                "".join(random_char() for _ in range(rng.randint(1, 8)))
            )
        sentences.append(" ".join(words))
    return sentences


def random_bpe_corpus(rng: random.Random) -> list[tuple[str, int]]:
    """A small word/count multiset over a small alphabet, ≤ 50 distinct words."""
    alphabet = rng.sample(string.ascii_lowercase, rng.randint(3, 8))
    distinct = rng.randint(1, 50)
    words: dict[str, int] = {}
    while len(words) < distinct:
        length = rng.randint(1, 8)
        word = "".join(rng.choice(alphabet) for _ in range(length))
        words.setdefault(word, rng.randint(1, 9))
    return list(words.items())
