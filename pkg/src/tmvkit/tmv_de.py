"""Tense/mood/voice classification for German verbal complexes.

The finite member contributes a (tense, mood) pair, read from morph
features, then from the fallback paradigm lexicon, then defaulting to
present indicative with a diagnostic. The surrounding chain shape (bare,
participle + haben/sein, infinitive + werden, worden chains, modals)
selects the label through three small composition tables.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

from .corpus_io import Sentence, Token
from .labels import (
    SUBJUNCTIVE_TENSES,
    Finiteness,
    GermanTense,
    Language,
    Mood,
    TMVLabel,
    Voice,
)
from .vc_builder import (
    DE_MODAL_LEMMAS,
    VerbalComplex,
    finiteness_of,
    is_infinitive_token,
    is_particle,
    is_participle_token,
)

# (tense, mood) -> label, for bare finite verbs and modal-headed chains.
_SIMPLE = {
    ("pres", "ind"): GermanTense.PRAESENS,
    ("past", "ind"): GermanTense.PRAETERITUM,
    ("pres", "subj"): GermanTense.KONJUNKTIV_I_PRESENT,
    ("past", "subj"): GermanTense.KONJUNKTIV_II_PRESENT,
}

# Perfect shift: haben/sein + participle, and perfect infinitives.
_PERFECT = {
    ("pres", "ind"): GermanTense.PERFEKT,
    ("past", "ind"): GermanTense.PLUSQUAMPERFEKT,
    ("pres", "subj"): GermanTense.KONJUNKTIV_I_PAST,
    ("past", "subj"): GermanTense.KONJUNKTIV_II_PAST,
}

# werden + infinitive. A past indicative here is ill-formed input; the
# caller adds a diagnostic and keeps the future reading.
_FUTURE = {
    ("pres", "ind"): GermanTense.FUTUR_I,
    ("past", "ind"): GermanTense.FUTUR_I,
    ("pres", "subj"): GermanTense.KONJUNKTIV_I_PRESENT,
    ("past", "subj"): GermanTense.KONJUNKTIV_II_PRESENT,
}

_FUTURE_PERFECT = {
    ("pres", "ind"): GermanTense.FUTUR_II,
    ("past", "ind"): GermanTense.FUTUR_II,
    ("pres", "subj"): GermanTense.KONJUNKTIV_I_PAST,
    ("past", "subj"): GermanTense.KONJUNKTIV_II_PAST,
}

_READING_RANK = {("pres", "ind"): 0, ("past", "ind"): 1,
                 ("pres", "subj"): 2, ("past", "subj"): 3}


@dataclass
class MorphFallbackLexicon:
    """(language, form, pos) -> possible (tense, mood) readings.

    Compensates for missing morph features on finite auxiliaries and
    modals. Ambiguous forms keep every reading; `preferred_reading` applies
    the indicative-first default.
    """

    entries: dict[tuple[str, str, str], frozenset[tuple[str, str]]] = field(
        default_factory=dict)

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[str, str, str, str, str]]
                  ) -> "MorphFallbackLexicon":
        collected: dict[tuple[str, str, str], set[tuple[str, str]]] = {}
        for language, form, pos, tense, mood in rows:
            key = (language.lower(), form.lower(), pos)
            collected.setdefault(key, set()).add((tense.lower(), mood.lower()))
        return cls({k: frozenset(v) for k, v in collected.items()})

    @classmethod
    def from_stream(cls, stream: IO[str]) -> "MorphFallbackLexicon":
        rows = []
        for line_no, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 5:
                raise ValueError(
                    f"lexicon line {line_no}: expected 5 columns, got {len(parts)}")
            rows.append(tuple(parts))
        return cls.from_rows(rows)

    @classmethod
    def from_path(cls, path: str | Path) -> "MorphFallbackLexicon":
        with open(path, encoding="utf-8") as stream:
            return cls.from_stream(stream)

    @classmethod
    def bundled(cls) -> "MorphFallbackLexicon":
        resource = importlib.resources.files("tmvkit.data") / "aux_lexicon.tsv"
        with resource.open("r", encoding="utf-8") as stream:
            return cls.from_stream(stream)

    def lookup(self, language: str, form: str,
               pos: str) -> frozenset[tuple[str, str]]:
        key = (language.lower(), form.lower(), pos)
        hit = self.entries.get(key)
        if hit:
            return hit
        # POS mismatches (UD tagsets) fall back to a form-only match.
        matches: set[tuple[str, str]] = set()
        for (lang, lex_form, _lex_pos), readings in self.entries.items():
            if lang == language.lower() and lex_form == form.lower():
                matches.update(readings)
        return frozenset(matches)

    def preferred_reading(self, language: str, form: str,
                          pos: str) -> tuple[str, str] | None:
        readings = self.lookup(language, form, pos)
        if not readings:
            return None
        return min(readings, key=lambda r: _READING_RANK.get(r, 9))


_BUNDLED_LEXICON: MorphFallbackLexicon | None = None


def default_lexicon() -> MorphFallbackLexicon:
    global _BUNDLED_LEXICON
    if _BUNDLED_LEXICON is None:
        _BUNDLED_LEXICON = MorphFallbackLexicon.bundled()
    return _BUNDLED_LEXICON


_SEIN_PERFECT: frozenset[str] | None = None


def sein_perfect_lemmas() -> frozenset[str]:
    """Lemmas forming their composed past with sein."""
    global _SEIN_PERFECT
    if _SEIN_PERFECT is None:
        resource = importlib.resources.files("tmvkit.data") / "sein_perfect_verbs.txt"
        lemmas = set()
        with resource.open("r", encoding="utf-8") as stream:
            for raw in stream:
                line = raw.strip()
                if line and not line.startswith("#"):
                    lemmas.add(line.lower())
        _SEIN_PERFECT = frozenset(lemmas)
    return _SEIN_PERFECT


def de_lemma(token: Token) -> str:
    return token.lemma.lower() if token.lemma else token.form.lower()


def finite_tense_mood(token: Token, lexicon: MorphFallbackLexicon | None,
                      notes: list[str]) -> tuple[str, str]:
    """(tense, mood) of a finite verb: morph, then lexicon, then default."""
    tense = token.morph.get("Tense")
    mood = token.morph.get("Mood")
    if mood == "imp":
        mood = "ind"
    if tense in ("pres", "past") and mood in ("ind", "subj"):
        return tense, mood
    if tense in ("pres", "past") and mood is None:
        return tense, "ind"
    lex = lexicon if lexicon is not None else default_lexicon()
    reading = lex.preferred_reading("de", token.form, token.pos)
    if reading is not None:
        if mood in ("ind", "subj"):
            # Morph already pinned the mood; keep the lexicon's tense for it.
            candidates = [r for r in lex.lookup("de", token.form, token.pos)
                          if r[1] == mood]
            if candidates:
                return min(candidates, key=lambda r: _READING_RANK.get(r, 9))
        return reading
    notes.append("no-morph")
    if mood in ("ind", "subj"):
        return "pres", mood
    return "pres", "ind"


def classify_de(vc: VerbalComplex, sentence: Sentence,
                lexicon: MorphFallbackLexicon | None = None) -> TMVLabel:
    """Label one German verbal complex.

    Progressive is always false for German. Subjunctive mood and the
    Konjunktiv labels imply each other.
    """
    tokens = vc.tokens(sentence)
    verbs = [t for t in tokens if not is_particle(t)]
    finiteness = finiteness_of(vc, sentence)
    notes: list[str] = list(vc.notes)
    imperative = "imperative" in vc.notes

    finite = vc.finite_token(sentence)
    if finite is None and vc.carried_finite is not None:
        finite = sentence.token(vc.carried_finite)
        finiteness = Finiteness.FINITE

    if finiteness is not Finiteness.FINITE or finite is None:
        has_pp = any(is_participle_token(t) for t in verbs)
        worden = any(t.form.lower() == "worden" for t in verbs)
        werden_inf = any(de_lemma(t) == "werden" and is_infinitive_token(t)
                         for t in verbs if t.index != vc.main_index)
        voice = Voice.PASSIVE if worden or (has_pp and werden_inf) else Voice.ACTIVE
        return TMVLabel(
            language=Language.DE,
            tense=GermanTense.INFINITIVE,
            mood=Mood.INDICATIVE,
            voice=voice,
            finiteness=finiteness,
            progressive=False,
            notes=tuple(notes),
        )

    tense_mood = finite_tense_mood(finite, lexicon, notes)
    main = vc.main_token(sentence)
    main_is_finite = main.index == finite.index
    others = [t for t in verbs
              if t.index != finite.index and t.index != main.index]

    finite_lemma = de_lemma(finite)
    is_modal = finite_lemma in DE_MODAL_LEMMAS or finite.pos == "VMFIN"
    main_pp = is_participle_token(main) and not main_is_finite
    main_inf = is_infinitive_token(main) and not main_is_finite
    worden = any(t.form.lower() == "worden" for t in others)
    aux_inf = {de_lemma(t) for t in others if is_infinitive_token(t)}

    voice = Voice.ACTIVE
    statal = False

    if main_is_finite and not others:
        tense = _SIMPLE[tense_mood]
    elif is_modal:
        if main_inf and not others:
            tense = _SIMPLE[tense_mood]
        elif main_pp:
            if worden and "sein" in aux_inf:
                voice = Voice.PASSIVE
                tense = _PERFECT[tense_mood]
            elif "werden" in aux_inf:
                voice = Voice.PASSIVE
                tense = _SIMPLE[tense_mood]
            elif aux_inf & {"haben", "sein"}:
                tense = _PERFECT[tense_mood]
            else:
                notes.append("unrecognized-chain")
                tense = _SIMPLE[tense_mood]
        else:
            notes.append("unrecognized-chain")
            tense = _SIMPLE[tense_mood]
    elif finite_lemma == "haben":
        if main_pp and not worden:
            tense = _PERFECT[tense_mood]
        else:
            notes.append("unrecognized-chain")
            tense = _PERFECT[tense_mood] if main_pp else _SIMPLE[tense_mood]
    elif finite_lemma == "sein":
        if main_pp and worden:
            voice = Voice.PASSIVE
            tense = _PERFECT[tense_mood]
        elif main_pp:
            if de_lemma(main) in sein_perfect_lemmas():
                tense = _PERFECT[tense_mood]
            else:
                voice = Voice.PASSIVE
                statal = True
                tense = _SIMPLE[tense_mood]
        else:
            notes.append("unrecognized-chain")
            tense = _SIMPLE[tense_mood]
    elif finite_lemma == "werden":
        if main_inf:
            tense = _FUTURE[tense_mood]
            if tense_mood == ("past", "ind"):
                notes.append("unrecognized-chain")
        elif main_pp:
            if worden and "sein" in aux_inf:
                voice = Voice.PASSIVE
                tense = _FUTURE_PERFECT[tense_mood]
            elif "werden" in aux_inf:
                voice = Voice.PASSIVE
                tense = _FUTURE[tense_mood]
            elif aux_inf & {"haben", "sein"}:
                tense = _FUTURE_PERFECT[tense_mood]
            else:
                voice = Voice.PASSIVE
                tense = _SIMPLE[tense_mood]
        else:
            notes.append("unrecognized-chain")
            tense = _SIMPLE[tense_mood]
    else:
        # Finite full verb with extra chain material (absentive, AcI, ...):
        # no rule row, keep the finite reading.
        if others or not main_is_finite:
            notes.append("unrecognized-chain")
        tense = _SIMPLE[tense_mood]

    if statal:
        notes.append("statal-passive")
    if imperative:
        tense = GermanTense.PRAESENS
        mood = Mood.IMPERATIVE
    else:
        mood = (Mood.SUBJUNCTIVE if tense in SUBJUNCTIVE_TENSES
                else Mood.INDICATIVE)

    return TMVLabel(
        language=Language.DE,
        tense=tense,
        mood=mood,
        voice=voice,
        finiteness=Finiteness.FINITE,
        progressive=False,
        notes=tuple(notes),
    )
