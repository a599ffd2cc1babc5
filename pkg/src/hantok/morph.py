"""Morpheme segmentation with restored whitespace positions.

Analyzers emit wakati output: one line of space-separated morphemes per
sentence, with the original spacing discarded. align_wakati matches those
morphemes back onto the source sentence and inserts SPACE_MARKER wherever a
real space was consumed, so the sentence can be reconstructed exactly.

Three analyzer front ends share that contract: a built-in longest-match
dictionary analyzer, a table of precomputed wakati lines, and an external
command producing wakati lines (one per input line) over stdin/stdout.
"""

from __future__ import annotations

import shlex
import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import AlignmentError, ConfigError, DataError, ModelFormatError
from .markers import SPACE_MARKER


def normalize_text(text: str) -> str:
    """Collapse Unicode whitespace runs to single spaces and trim the ends.

    Whitespace is treated as a binary boundary: the segmentation layer keeps
    one marker per gap and never models how wide the gap was.
    """
    return " ".join(text.split())


@dataclass(frozen=True)
class MorphSegmentation:
    """Ordered morphemes interleaved with SPACE_MARKER units."""

    units: tuple[str, ...]

    def text(self) -> str:
        """Reconstruct the normalized source sentence."""
        return "".join(" " if u == SPACE_MARKER else u for u in self.units)

    def morphemes(self) -> tuple[str, ...]:
        """The units without the whitespace markers."""
        return tuple(u for u in self.units if u != SPACE_MARKER)


@dataclass(frozen=True)
class MorphDictionary:
    """Known morpheme strings for the longest-match analyzer."""

    entries: frozenset[str]
    max_len: int

    @classmethod
    def from_iterable(cls, morphemes: Iterable[str]) -> "MorphDictionary":
        entries = frozenset(morphemes)
        if not entries:
            raise ConfigError("morpheme dictionary is empty")
        for entry in entries:
            if not entry or entry.split() != [entry]:
                raise ConfigError(f"invalid dictionary entry: {entry!r}")
        return cls(entries=entries, max_len=max(len(e) for e in entries))

    @classmethod
    def from_file(cls, path: str | Path) -> "MorphDictionary":
        entries = []
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                entry = line.rstrip("\n")
                if not entry:
                    continue
                if entry.split() != [entry]:
                    raise ModelFormatError(
                        f"dictionary entry contains whitespace: {entry!r}", lineno
                    )
                entries.append(entry)
        if not entries:
            raise ConfigError(f"morpheme dictionary is empty: {path}")
        return cls.from_iterable(entries)

    def __contains__(self, morpheme: str) -> bool:
        return morpheme in self.entries


def align_wakati(source: str, analyzer_output: str) -> MorphSegmentation:
    """Match wakati morphemes onto the source, marking consumed spaces.

    Matching is strict and left-to-right; any morpheme that does not match
    the source at the current position raises AlignmentError with the first
    mismatch offset instead of guessing.
    """
    source = normalize_text(source)
    morphemes = analyzer_output.split()
    units: list[str] = []
    pos = 0
    for morpheme in morphemes:
        if source.startswith(" ", pos):
            units.append(SPACE_MARKER)
            pos += 1
        if not source.startswith(morpheme, pos):
            raise AlignmentError(
                f"analyzer morpheme {morpheme!r} does not match source", pos
            )
        units.append(morpheme)
        pos += len(morpheme)
    if pos != len(source):
        raise AlignmentError("analyzer output ends before the source does", pos)
    return MorphSegmentation(units=tuple(units))


def segment_longest_match(text: str, dictionary: MorphDictionary) -> MorphSegmentation:
    """Greedy longest-prefix dictionary segmentation.

    Within each whitespace-delimited chunk the longest dictionary prefix is
    taken repeatedly; a character with no dictionary prefix falls back to a
    single-character morpheme, so the segmentation is total.
    """
    text = normalize_text(text)
    units: list[str] = []
    for chunk_index, chunk in enumerate(text.split(" ") if text else []):
        if chunk_index:
            units.append(SPACE_MARKER)
        pos = 0
        while pos < len(chunk):
            limit = min(dictionary.max_len, len(chunk) - pos)
            for length in range(limit, 0, -1):
                if chunk[pos : pos + length] in dictionary:
                    break
            else:
                length = 1
            units.append(chunk[pos : pos + length])
            pos += length
    return MorphSegmentation(units=tuple(units))


class MorphAnalyzer:
    """Common front end: one MorphSegmentation per sentence."""

    def segment(self, text: str) -> MorphSegmentation:
        raise NotImplementedError

    def segment_many(self, lines: Sequence[str]) -> list[MorphSegmentation]:
        return [self.segment(line) for line in lines]


class DictionaryAnalyzer(MorphAnalyzer):
    """Deterministic longest-match analyzer over a fixed dictionary."""

    def __init__(self, dictionary: MorphDictionary):
        self.dictionary = dictionary

    def segment(self, text: str) -> MorphSegmentation:
        return segment_longest_match(text, self.dictionary)


class WakatiTable(MorphAnalyzer):
    """Precomputed analyzer output, keyed by the normalized source sentence."""

    def __init__(self, sources: Sequence[str], wakati_lines: Sequence[str]):
        if len(sources) != len(wakati_lines):
            raise DataError(
                f"{len(sources)} sentences but {len(wakati_lines)} wakati lines"
            )
        self._table: dict[str, MorphSegmentation] = {}
        for source, wakati in zip(sources, wakati_lines):
            seg = align_wakati(source, wakati)
            key = normalize_text(source)
            previous = self._table.get(key)
            if previous is not None and previous != seg:
                raise DataError(f"conflicting wakati output for sentence {key!r}")
            self._table[key] = seg

    def segment(self, text: str) -> MorphSegmentation:
        key = normalize_text(text)
        try:
            return self._table[key]
        except KeyError:
            raise DataError(f"no wakati output for sentence {key!r}") from None


class CommandAnalyzer(MorphAnalyzer):
    """External analyzer run as a subprocess, one wakati line per input line.

    Each call spawns a fresh process and feeds it the whole batch, so no
    stream state is shared between concurrent callers.
    """

    def __init__(self, command: str | Sequence[str]):
        self.argv = shlex.split(command) if isinstance(command, str) else list(command)
        if not self.argv:
            raise ConfigError("empty analyzer command")

    def segment(self, text: str) -> MorphSegmentation:
        return self.segment_many([text])[0]

    def segment_many(self, lines: Sequence[str]) -> list[MorphSegmentation]:
        normalized = [normalize_text(line) for line in lines]
        payload = "".join(line + "\n" for line in normalized)
        try:
            proc = subprocess.run(
                self.argv, input=payload, capture_output=True, text=True
            )
        except OSError as exc:
            raise ConfigError(f"cannot run analyzer {self.argv}: {exc}") from exc
        if proc.returncode != 0:
            raise DataError(
                f"analyzer exited with {proc.returncode}: {proc.stderr.strip()}"
            )
        output = proc.stdout.split("\n")
        if output and output[-1] == "":
            output.pop()
        if len(output) != len(normalized):
            raise DataError(
                f"analyzer returned {len(output)} lines for {len(normalized)} inputs"
            )
        return [align_wakati(src, out) for src, out in zip(normalized, output)]
