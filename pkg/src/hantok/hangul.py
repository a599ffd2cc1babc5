"""Hangul syllable and jamo codec.

A modern Hangul syllable in U+AC00..U+D7A3 is an arithmetic combination of a
lead consonant (19 choices), a vowel (21) and an optional tail consonant (27):

    code point = 0xAC00 + (lead_index * 21 + vowel_index) * 28 + tail_index

where tail_index 0 means "no tail". All jamo here are rendered in the
compatibility block (U+3131..U+3163) so that the same consonant letter is one
code point whether it appears in lead or tail position; modern text then
decomposes into an alphabet of at most 51 distinct jamo.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import JamoComposeError, JamoPositionError, SyllableRangeError
from .markers import SPACE_MARKER

SYLLABLE_FIRST = 0xAC00
SYLLABLE_LAST = 0xD7A3

# Compatibility jamo, in the index order used by the syllable arithmetic.
LEADS = (
    "ㄱ", "ㄲ", "ㄴ", "ㄷ", "ㄸ", "ㄹ", "ㅁ", "ㅂ", "ㅃ", "ㅅ",
    "ㅆ", "ㅇ", "ㅈ", "ㅉ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ",
)
VOWELS = (
    "ㅏ", "ㅐ", "ㅑ", "ㅒ", "ㅓ", "ㅔ", "ㅕ", "ㅖ", "ㅗ", "ㅘ",
    "ㅙ", "ㅚ", "ㅛ", "ㅜ", "ㅝ", "ㅞ", "ㅟ", "ㅠ", "ㅡ", "ㅢ", "ㅣ",
)
# Tail index 0 is "no tail"; TAILS[i] corresponds to tail index i + 1.
TAILS = (
    "ㄱ", "ㄲ", "ㄳ", "ㄴ", "ㄵ", "ㄶ", "ㄷ", "ㄹ", "ㄺ", "ㄻ",
    "ㄼ", "ㄽ", "ㄾ", "ㄿ", "ㅀ", "ㅁ", "ㅂ", "ㅄ", "ㅅ", "ㅆ",
    "ㅇ", "ㅈ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ",
)

_LEAD_INDEX = {ch: i for i, ch in enumerate(LEADS)}
_VOWEL_INDEX = {ch: i for i, ch in enumerate(VOWELS)}
_TAIL_INDEX = {ch: i + 1 for i, ch in enumerate(TAILS)}

# Lead and tail consonants overlap, so modern text uses at most 51 jamo.
MODERN_JAMO = frozenset(LEADS) | frozenset(VOWELS) | frozenset(TAILS)

# Every Unicode jamo block, modern or archaic, conjoining or compatibility.
_JAMO_RANGES = (
    (0x1100, 0x11FF),  # conjoining jamo
    (0x3131, 0x318E),  # compatibility jamo
    (0xA960, 0xA97C),  # extended-A
    (0xD7B0, 0xD7FF),  # extended-B
)


class CharClass(Enum):
    HANGUL_SYLLABLE = "syllable"
    JAMO = "jamo"
    WHITESPACE = "whitespace"
    OTHER = "other"


def classify(ch: str) -> CharClass:
    """Classify a single character; total over all Unicode scalar values."""
    cp = ord(ch)
    if SYLLABLE_FIRST <= cp <= SYLLABLE_LAST:
        return CharClass.HANGUL_SYLLABLE
    if any(lo <= cp <= hi for lo, hi in _JAMO_RANGES):
        return CharClass.JAMO
    if ch.isspace():
        return CharClass.WHITESPACE
    return CharClass.OTHER


def is_syllable(ch: str) -> bool:
    return SYLLABLE_FIRST <= ord(ch) <= SYLLABLE_LAST


@dataclass(frozen=True)
class JamoTriple:
    """One syllable's jamo: lead consonant, vowel, optional tail consonant."""

    lead: str
    vowel: str
    tail: str | None = None

    def __post_init__(self):
        if self.lead not in _LEAD_INDEX:
            raise JamoPositionError(f"invalid lead jamo: {self.lead!r}")
        if self.vowel not in _VOWEL_INDEX:
            raise JamoPositionError(f"invalid vowel jamo: {self.vowel!r}")
        if self.tail is not None and self.tail not in _TAIL_INDEX:
            raise JamoPositionError(f"invalid tail jamo: {self.tail!r}")

    def jamo(self) -> tuple[str, ...]:
        """The triple's jamo in writing order, without the empty tail slot."""
        if self.tail is None:
            return (self.lead, self.vowel)
        return (self.lead, self.vowel, self.tail)


def decompose_syllable(ch: str) -> JamoTriple:
    """Split one Hangul syllable character into its jamo triple."""
    if len(ch) != 1 or not is_syllable(ch):
        raise SyllableRangeError(f"not a Hangul syllable: {ch!r}")
    index = ord(ch) - SYLLABLE_FIRST
    tail_index = index % 28
    vowel_index = (index // 28) % 21
    lead_index = index // (28 * 21)
    return JamoTriple(
        lead=LEADS[lead_index],
        vowel=VOWELS[vowel_index],
        tail=TAILS[tail_index - 1] if tail_index else None,
    )


def compose_syllable(triple: JamoTriple) -> str:
    """Assemble a jamo triple back into its syllable character."""
    index = (_LEAD_INDEX[triple.lead] * 21 + _VOWEL_INDEX[triple.vowel]) * 28
    if triple.tail is not None:
        index += _TAIL_INDEX[triple.tail]
    return chr(SYLLABLE_FIRST + index)


def decompose_text(text: str) -> str:
    """Decompose every syllable in ``text``; other characters pass through."""
    out: list[str] = []
    for ch in text:
        if is_syllable(ch):
            out.extend(decompose_syllable(ch).jamo())
        else:
            out.append(ch)
    return "".join(out)


def compose_jamo_stream(jamos: Iterable[str]) -> str:
    """Recombine a character stream containing jamo back into syllables.

    Jamo runs are parsed greedily: a consonant starts a new syllable when a
    vowel follows, otherwise it closes the previous syllable as its tail.
    That rule is the unique inverse of decomposition for well-formed streams.
    SPACE_MARKER becomes a space and non-jamo characters pass through. A run
    with no valid parse raises JamoComposeError carrying the offset; archaic
    jamo (outside the modern 19/21/27 sets) are rejected the same way.
    """
    s = "".join(jamos)
    out: list[str] = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch == SPACE_MARKER:
            out.append(" ")
            i += 1
            continue
        if classify(ch) is not CharClass.JAMO:
            out.append(ch)
            i += 1
            continue
        if ch not in MODERN_JAMO:
            raise JamoComposeError(f"archaic jamo {ch!r} not composable", i)
        if ch in _VOWEL_INDEX:
            raise JamoComposeError(f"vowel {ch!r} without a lead", i)
        if ch not in _LEAD_INDEX:
            # Tail-only cluster like ㄺ cannot open a syllable.
            raise JamoComposeError(f"consonant {ch!r} cannot start a syllable", i)
        if i + 1 >= n or s[i + 1] not in _VOWEL_INDEX:
            raise JamoComposeError(f"lead {ch!r} has no following vowel", i)
        lead, vowel = ch, s[i + 1]
        i += 2
        tail = None
        if i < n and s[i] in _TAIL_INDEX:
            # The consonant is the next syllable's lead when a vowel follows.
            starts_next = (
                s[i] in _LEAD_INDEX and i + 1 < n and s[i + 1] in _VOWEL_INDEX
            )
            if not starts_next:
                tail = s[i]
                i += 1
        out.append(compose_syllable(JamoTriple(lead, vowel, tail)))
    return "".join(out)
