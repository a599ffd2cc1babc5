"""Korean tokenization toolkit.

Six segmentation strategies over Korean text, coarse to fine: word,
morpheme, subword (BPE), morpheme-aware subword, syllable, and
consonant/vowel (jamo). All strategies except word-level detokenize back to
the normalized source exactly. Ships a from-scratch BPE trainer, pluggable
morpheme analysis, token/id vocabularies, and corpus diagnostics.
"""

__version__ = "0.1.0"

from .bpe import BpeModel, MergeRule, encode_word, load_model, save_model, train_bpe
from .errors import (
    AlignmentError,
    ConfigError,
    DataError,
    HantokError,
    JamoComposeError,
    JamoPositionError,
    ModelFormatError,
    SyllableRangeError,
    TokenStructureError,
    VocabRangeError,
)
from .hangul import (
    JamoTriple,
    compose_jamo_stream,
    compose_syllable,
    decompose_syllable,
    decompose_text,
)
from .markers import SPACE_MARKER, WORD_MARKER
from .morph import (
    CommandAnalyzer,
    DictionaryAnalyzer,
    MorphAnalyzer,
    MorphDictionary,
    MorphSegmentation,
    WakatiTable,
    align_wakati,
    normalize_text,
    segment_longest_match,
)
from .stats import (
    CorpusReport,
    avg_len,
    avg_syllables_per_token,
    boundary_spanning,
    boundary_spanning_corpus,
    oov_rate,
    under_trained_curve,
)
from .strategies import (
    STRATEGY_KINDS,
    CvStrategy,
    MorphemeAwareSubwordStrategy,
    MorphemeStrategy,
    Strategy,
    SubwordStrategy,
    SyllableStrategy,
    WordStrategy,
    create_strategy,
    detokenize,
)
from .vocab import (
    SPECIAL_TOKENS,
    UNK_ID,
    UNK_TOKEN,
    Vocabulary,
    build_vocab,
    decode_ids,
    encode_ids,
    load_vocab,
    save_vocab,
    vocab_from_pieces,
)

__all__ = [
    "AlignmentError",
    "BpeModel",
    "CommandAnalyzer",
    "ConfigError",
    "CorpusReport",
    "CvStrategy",
    "DataError",
    "DictionaryAnalyzer",
    "HantokError",
    "JamoComposeError",
    "JamoPositionError",
    "JamoTriple",
    "MergeRule",
    "ModelFormatError",
    "MorphAnalyzer",
    "MorphDictionary",
    "MorphSegmentation",
    "MorphemeAwareSubwordStrategy",
    "MorphemeStrategy",
    "SPACE_MARKER",
    "SPECIAL_TOKENS",
    "STRATEGY_KINDS",
    "Strategy",
    "SubwordStrategy",
    "SyllableRangeError",
    "SyllableStrategy",
    "TokenStructureError",
    "UNK_ID",
    "UNK_TOKEN",
    "VocabRangeError",
    "Vocabulary",
    "WakatiTable",
    "WORD_MARKER",
    "WordStrategy",
    "align_wakati",
    "avg_len",
    "avg_syllables_per_token",
    "boundary_spanning",
    "boundary_spanning_corpus",
    "build_vocab",
    "compose_jamo_stream",
    "compose_syllable",
    "create_strategy",
    "decode_ids",
    "decompose_syllable",
    "decompose_text",
    "detokenize",
    "encode_ids",
    "encode_word",
    "load_model",
    "load_vocab",
    "normalize_text",
    "oov_rate",
    "save_model",
    "save_vocab",
    "segment_longest_match",
    "train_bpe",
    "under_trained_curve",
    "vocab_from_pieces",
]
