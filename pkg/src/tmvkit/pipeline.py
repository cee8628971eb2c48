"""Per-sentence orchestration: extract complexes, classify, format rows.

Pure functions over single sentences or sentence pairs, so callers can
distribute them across workers and keep output order canonical.
"""

from __future__ import annotations

from typing import Iterable

from .corpus_io import AlignmentSet, Diagnostics, Sentence
from .labels import Language, TMVLabel
from .pair_extractor import PairResult, VCPair, pair_vcs
from .tmv_de import MorphFallbackLexicon, classify_de
from .tmv_en import classify_en
from .vc_builder import VerbalComplex, extract_vcs

PAIR_COLUMNS = (
    "pair_id",
    "en_label",
    "de_label",
    "en_tokens",
    "de_tokens",
    "link_count",
    "en_mood",
    "de_mood",
    "en_voice",
    "de_voice",
    "main_verb_aligned",
)


def classify(
    vc: VerbalComplex,
    sentence: Sentence,
    lexicon: MorphFallbackLexicon | None = None,
    modal_preterite: str = "present",
) -> TMVLabel:
    """Language dispatch over the two rule sets."""
    if vc.language is Language.EN:
        return classify_en(vc, sentence, modal_preterite=modal_preterite)
    return classify_de(vc, sentence, lexicon=lexicon)


def label_sentence(
    sentence: Sentence,
    scheme: str = "chain",
    lexicon: MorphFallbackLexicon | None = None,
    modal_preterite: str = "present",
) -> list[tuple[VerbalComplex, TMVLabel]]:
    return [
        (vc, classify(vc, sentence, lexicon, modal_preterite))
        for vc in extract_vcs(sentence, scheme=scheme)
    ]


def annotation_rows(
    sentence: Sentence, labeled: Iterable[tuple[VerbalComplex, TMVLabel]]
) -> list[tuple[str, ...]]:
    rows = []
    for vc, label in labeled:
        main = sentence.token(vc.main_index)
        rows.append(
            (
                sentence.id,
                ",".join(str(i) for i in vc.members),
                main.form,
                main.lemma or main.form.lower(),
                label.display,
                label.mood.value,
                label.voice.value,
                label.finiteness.value,
                "1" if label.progressive else "0",
            )
        )
    return rows


def _vc_surface(vc: VerbalComplex, sentence: Sentence) -> str:
    return " ".join(sentence.token(i).form for i in vc.members)


def pair_sentence(
    en_sentence: Sentence,
    de_sentence: Sentence,
    alignment: AlignmentSet,
    scheme: str = "chain",
    mode: str = "greedy",
    require_main_alignment: bool = False,
    lexicon: MorphFallbackLexicon | None = None,
    modal_preterite: str = "present",
    diagnostics: Diagnostics | None = None,
) -> tuple[PairResult, list[tuple[VCPair, TMVLabel, TMVLabel]]]:
    """Pair one aligned sentence pair and label both sides of each pair."""
    en_vcs = extract_vcs(en_sentence, scheme=scheme)
    de_vcs = extract_vcs(de_sentence, scheme=scheme)
    result = pair_vcs(
        en_sentence,
        de_sentence,
        en_vcs,
        de_vcs,
        alignment,
        mode=mode,
        require_main_alignment=require_main_alignment,
        diagnostics=diagnostics,
    )
    labeled = [
        (
            pair,
            classify_en(pair.source, en_sentence, modal_preterite=modal_preterite),
            classify_de(pair.target, de_sentence, lexicon=lexicon),
        )
        for pair in result.pairs
    ]
    return result, labeled


def pair_rows(
    en_sentence: Sentence,
    de_sentence: Sentence,
    labeled_pairs: Iterable[tuple[VCPair, TMVLabel, TMVLabel]],
) -> list[tuple[str, ...]]:
    rows = []
    for n, (pair, en_label, de_label) in enumerate(labeled_pairs, 1):
        rows.append(
            (
                f"{en_sentence.id}:{n}",
                en_label.display,
                de_label.display,
                _vc_surface(pair.source, en_sentence),
                _vc_surface(pair.target, de_sentence),
                str(pair.link_count),
                en_label.mood.value,
                de_label.mood.value,
                en_label.voice.value,
                de_label.voice.value,
                "1" if pair.main_verb_aligned else "0",
            )
        )
    return rows
