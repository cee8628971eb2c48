"""Context features around a verbal complex: subject, temporal words, markers.

Everything here is read-only over the parse; labels are attached as
given and never modified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, TextIO

from .corpus_io import Sentence, Token
from .labels import TMVLabel
from .vc_builder import SUBJECT_DEPRELS, VerbalComplex

TEMPORAL_DIRECTIONS = ("future", "past", "neutral")

CONDITIONAL_MARKERS = frozenset({"if", "unless", "wenn", "falls", "sofern"})

# POS classes allowed to match the temporal lexicon. Restricting nouns
# and adverbs keeps homographs out (modal "may" vs. the month).
_ADVERB_POS = frozenset({"RB", "RBR", "RBS", "ADV", "ADJD", "PAV", "PROAV", "PWAV"})
_NOUN_POS = frozenset({"NN", "NNS", "NNP", "NNPS", "NE", "NOUN", "PROPN"})
_DETERMINER_POS = frozenset({"DT", "PDT", "WDT", "ART", "PDAT", "PIAT", "PWAT", "DET"})
_PREPOSITION_POS = frozenset({"IN", "TO", "APPR", "APPRART", "ADP"})


class TemporalLexicon:
    """Temporal terms tagged with the direction they point in."""

    def __init__(self, terms: Mapping[str, str]):
        for term, direction in terms.items():
            if direction not in TEMPORAL_DIRECTIONS:
                raise ValueError(
                    f"bad direction {direction!r} for term {term!r}; "
                    f"expected one of {TEMPORAL_DIRECTIONS}"
                )
        self._terms = {term.lower(): direction for term, direction in terms.items()}

    def __contains__(self, term: str) -> bool:
        return term.lower() in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def direction(self, term: str) -> str | None:
        return self._terms.get(term.lower())

    @classmethod
    def from_stream(cls, stream: Iterable[str]) -> "TemporalLexicon":
        terms = {}
        for raw in stream:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            term = parts[0].strip()
            direction = parts[1].strip() if len(parts) > 1 else "neutral"
            terms[term] = direction
        return cls(terms)

    @classmethod
    def from_path(cls, path: str | Path) -> "TemporalLexicon":
        with open(path, encoding="utf-8") as handle:
            return cls.from_stream(handle)


_DEFAULT_LEXICON: TemporalLexicon | None = None


def default_temporal_lexicon() -> TemporalLexicon:
    global _DEFAULT_LEXICON
    if _DEFAULT_LEXICON is None:
        source = resources.files("tmvkit.data").joinpath("temporal_terms.tsv")
        _DEFAULT_LEXICON = TemporalLexicon.from_stream(
            source.read_text(encoding="utf-8").splitlines()
        )
    return _DEFAULT_LEXICON


@dataclass(frozen=True)
class TemporalExpression:
    lemma: str
    relation: str
    position: int
    direction: str = "neutral"

    def render(self) -> str:
        return f"{self.lemma}:{self.relation}:{self.position}"


@dataclass(frozen=True)
class FeatureRecord:
    sentence_id: str
    vc_indices: tuple[int, ...]
    main_verb_lemma: str
    vc_pattern: str
    tense_label: str
    mood: str
    voice: str
    subject_lemma: str | None = None
    subject_determiner: str | None = None
    subject_number: str | None = None
    temporal: tuple[TemporalExpression, ...] = ()
    conditional: bool = False

    def as_dict(self) -> dict:
        return {
            "sentence_id": self.sentence_id,
            "vc_indices": list(self.vc_indices),
            "main_verb_lemma": self.main_verb_lemma,
            "vc_pattern": self.vc_pattern,
            "tense_label": self.tense_label,
            "mood": self.mood,
            "voice": self.voice,
            "subject_lemma": self.subject_lemma,
            "subject_determiner": self.subject_determiner,
            "subject_number": self.subject_number,
            "temporal": [
                {
                    "lemma": t.lemma,
                    "relation": t.relation,
                    "position": t.position,
                    "direction": t.direction,
                }
                for t in self.temporal
            ],
            "conditional": self.conditional,
        }


FEATURE_COLUMNS = (
    "sentence_id",
    "vc_token_indices",
    "main_verb_lemma",
    "vc_pattern",
    "tense_label",
    "mood",
    "voice",
    "subject_lemma",
    "subject_determiner",
    "subject_number",
    "temporal_expressions",
    "conditional",
)


def _nearest_dominating_vc(
    token: Token, sentence: Sentence, member_map: Mapping[int, int]
) -> int | None:
    """Index (into the VC list) of the closest ancestor complex."""
    seen = set()
    current = token
    while current.head and current.head not in seen:
        seen.add(current.index)
        if current.head in member_map:
            return member_map[current.head]
        current = sentence.token(current.head)
    return None


def _subject_token(vc: VerbalComplex, sentence: Sentence) -> Token | None:
    anchors = []
    if vc.finite_index:
        anchors.append(vc.finite_index)
    if vc.main_index not in anchors:
        anchors.append(vc.main_index)
    for member in vc.members:
        if member not in anchors:
            anchors.append(member)
    for anchor in anchors:
        for child in sentence.children(anchor):
            if child.deprel in SUBJECT_DEPRELS:
                return child
    return None


def _subject_number(token: Token) -> str | None:
    for key in ("Number", "number", "num"):
        value = token.morph.get(key)
        if value:
            low = value.lower()
            if low.startswith("s"):
                return "sg"
            if low.startswith("p"):
                return "pl"
    if token.pos in ("NNS", "NNPS"):
        return "pl"
    if token.pos in ("NN", "NNP"):
        return "sg"
    return None


def _subject_determiner(token: Token, sentence: Sentence) -> str | None:
    for child in sentence.children(token.index):
        if child.pos in _DETERMINER_POS or child.upos == "DET" or child.deprel in (
            "det", "DET"
        ):
            return child.form
    return None


def _temporal_relation(token: Token, sentence: Sentence) -> str:
    if token.pos in _ADVERB_POS or token.upos == "ADV":
        return "adverb"
    if token.head:
        parent = sentence.token(token.head)
        if parent.pos in _PREPOSITION_POS or parent.upos == "ADP":
            return parent.form.lower()
    for child in sentence.children(token.index):
        if child.pos in _PREPOSITION_POS or child.upos == "ADP":
            return child.form.lower()
    return "np"


def _vc_pattern(vc: VerbalComplex, sentence: Sentence) -> str:
    return "-".join(sentence.token(i).pos or "_" for i in vc.members)


def extract_context_features(
    sentence: Sentence,
    vc: VerbalComplex,
    label: TMVLabel,
    temporal_lexicon: TemporalLexicon | None = None,
    all_vcs: Iterable[VerbalComplex] | None = None,
    conditional_markers: frozenset[str] = CONDITIONAL_MARKERS,
) -> FeatureRecord:
    """Collect subject, temporal and clause-marker features for one complex.

    Temporal words and markers bind to the nearest complex that dominates
    them; pass all_vcs so inner clauses do not leak their context into
    outer ones. Without it, domination by this complex alone decides.
    """
    lexicon = temporal_lexicon or default_temporal_lexicon()
    vcs = list(all_vcs) if all_vcs is not None else [vc]
    if not any(v.members == vc.members for v in vcs):
        vcs.append(vc)
    member_map: dict[int, int] = {}
    vc_slot = 0
    for slot, candidate in enumerate(vcs):
        if candidate.members == vc.members:
            vc_slot = slot
        for member in candidate.members:
            member_map.setdefault(member, slot)

    subject = _subject_token(vc, sentence)
    subject_lemma = None
    subject_det = None
    subject_num = None
    if subject is not None:
        subject_lemma = subject.lemma or subject.form.lower()
        subject_det = _subject_determiner(subject, sentence)
        subject_num = _subject_number(subject)

    temporal = []
    conditional = False
    vc_members = set(vc.members)
    for token in sentence.tokens:
        if token.index in member_map:
            continue
        low_form = token.form.lower()
        if low_form in conditional_markers:
            owner = _nearest_dominating_vc(token, sentence, member_map)
            governs_member = any(t.head == token.index for t in sentence.tokens
                                 if t.index in vc_members)
            if owner == vc_slot or governs_member:
                conditional = True
        if token.pos in _ADVERB_POS or token.pos in _NOUN_POS or token.upos in (
            "ADV", "NOUN", "PROPN"
        ):
            term = low_form if low_form in lexicon else None
            if term is None and token.lemma and token.lemma.lower() in lexicon:
                term = token.lemma.lower()
            if term is None:
                continue
            owner = _nearest_dominating_vc(token, sentence, member_map)
            if owner != vc_slot:
                continue
            temporal.append(
                TemporalExpression(
                    lemma=token.lemma or low_form,
                    relation=_temporal_relation(token, sentence),
                    position=token.index,
                    direction=lexicon.direction(term) or "neutral",
                )
            )

    return FeatureRecord(
        sentence_id=sentence.id,
        vc_indices=vc.members,
        main_verb_lemma=sentence.token(vc.main_index).lemma
        or sentence.token(vc.main_index).form.lower(),
        vc_pattern=_vc_pattern(vc, sentence),
        tense_label=label.display,
        mood=label.mood.value,
        voice=label.voice.value,
        subject_lemma=subject_lemma,
        subject_determiner=subject_det,
        subject_number=subject_num,
        temporal=tuple(temporal),
        conditional=conditional,
    )


def write_features(records: Iterable[FeatureRecord], sink: TextIO) -> None:
    sink.write("#columns\t" + "\t".join(FEATURE_COLUMNS) + "\n")
    for record in records:
        sink.write(
            "\t".join(
                (
                    record.sentence_id,
                    ",".join(str(i) for i in record.vc_indices),
                    record.main_verb_lemma,
                    record.vc_pattern,
                    record.tense_label,
                    record.mood,
                    record.voice,
                    record.subject_lemma or "_",
                    record.subject_determiner or "_",
                    record.subject_number or "_",
                    ";".join(t.render() for t in record.temporal) or "_",
                    "1" if record.conditional else "0",
                )
            )
            + "\n"
        )
