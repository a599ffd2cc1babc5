"""Marker characters used by the tokenization strategies.

SPACE_MARKER stands in for an original whitespace position in jamo, syllable
and morpheme token streams. WORD_MARKER prefixes the first piece of a word
(or morpheme, in the hybrid strategy) in subword token streams. Both are
chosen outside the ASCII and Hangul ranges so they never collide with
ordinary corpus characters.
"""

SPACE_MARKER = "⭑"  # ★
WORD_MARKER = "▁"  # ▁
