"""Exception types shared across the toolkit.

ConfigError maps to CLI exit code 2, DataError and subclasses to exit code 1.
"""


class HantokError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(HantokError):
    """Invalid configuration or usage (bad sizes, missing files, bad flags)."""


class DataError(HantokError):
    """Invalid data encountered while processing otherwise valid requests."""


class SyllableRangeError(DataError):
    """A character outside the Hangul syllable block was passed to the codec."""


class JamoPositionError(DataError):
    """A jamo is invalid for its position in a triple (e.g. vowel as lead)."""


class JamoComposeError(DataError):
    """A jamo stream admits no valid syllable parse at ``offset``."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class AlignmentError(DataError):
    """Analyzer output cannot be aligned to the source sentence at ``offset``."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ModelFormatError(DataError):
    """A model or vocabulary file is malformed at ``line`` (1-based)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class TokenStructureError(DataError):
    """A token sequence violates the marker placement rules of its strategy."""


class VocabRangeError(DataError):
    """A token id falls outside the vocabulary."""
