"""Tense, mood and voice annotation for English-German parallel corpora.

The toolkit reads dependency-parsed text, groups verb tokens into verbal
complexes, assigns each complex a tense/mood/voice label, pairs the
complexes of word-aligned translations, and aggregates the pairs into
contrastive correspondence statistics.
"""

from .corpus_io import (
    AlignmentSet,
    CorpusFormatError,
    Diagnostics,
    Sentence,
    Token,
    parse_alignment,
    parse_conll,
    write_annotated,
    write_conll,
)
from .features import FeatureRecord, TemporalLexicon, extract_context_features
from .labels import (
    EnglishTense,
    Finiteness,
    GermanTense,
    Language,
    Mood,
    TMVLabel,
    Voice,
    display_order,
    tense_from_display,
)
from .pair_extractor import PairResult, VCPair, pair_vcs
from .pipeline import classify, label_sentence, pair_sentence
from .reference import explain, rules_dump
from .reports import run_report
from .stats import (
    CorrespondenceMatrix,
    LabelFilter,
    TenseDistribution,
    finiteness_ratio,
    lemma_tense_profile,
)
from .tmv_de import MorphFallbackLexicon, classify_de
from .tmv_en import classify_en
from .vc_builder import VerbalComplex, extract_vcs

__version__ = "0.1.0"

__all__ = [
    "AlignmentSet",
    "CorpusFormatError",
    "CorrespondenceMatrix",
    "Diagnostics",
    "EnglishTense",
    "FeatureRecord",
    "Finiteness",
    "GermanTense",
    "LabelFilter",
    "Language",
    "Mood",
    "MorphFallbackLexicon",
    "PairResult",
    "Sentence",
    "TMVLabel",
    "TemporalLexicon",
    "TenseDistribution",
    "Token",
    "VCPair",
    "VerbalComplex",
    "Voice",
    "classify",
    "classify_de",
    "classify_en",
    "display_order",
    "explain",
    "extract_context_features",
    "extract_vcs",
    "finiteness_ratio",
    "label_sentence",
    "lemma_tense_profile",
    "pair_sentence",
    "pair_vcs",
    "parse_alignment",
    "parse_conll",
    "rules_dump",
    "run_report",
    "tense_from_display",
    "write_annotated",
    "write_conll",
    "__version__",
]
