"""Label vocabulary for tense/mood/voice annotation.

The tense inventories are language specific and closed: every classifier
output maps bijectively onto one display label, and statistics are keyed by
the fixed display orders below.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Language(str, enum.Enum):
    EN = "en"
    DE = "de"


class EnglishTense(str, enum.Enum):
    PRESENT_SIMPLE = "presentSimple"
    PRESENT_PROGRESSIVE = "presentProgressive"
    PRESENT_PERFECT = "presentPerfect"
    PRESENT_PERFECT_PROGRESSIVE = "presentPerfectProgressive"
    PAST_SIMPLE = "pastSimple"
    PAST_PROGRESSIVE = "pastProgressive"
    PAST_PERFECT = "pastPerfect"
    PAST_PERFECT_PROGRESSIVE = "pastPerfectProgressive"
    FUTURE_I = "futureI"
    FUTURE_I_PROGRESSIVE = "futureIProgressive"
    FUTURE_II = "futureII"
    FUTURE_II_PROGRESSIVE = "futureIIProgressive"
    CONDITIONAL_I = "conditionalI"
    CONDITIONAL_I_PROGRESSIVE = "conditionalIProgressive"
    CONDITIONAL_II = "conditionalII"
    CONDITIONAL_II_PROGRESSIVE = "conditionalIIProgressive"
    GERUND = "gerund"
    TO_INFINITIVE = "toInfinitive"
    BARE_INFINITIVE = "bareInfinitive"


class GermanTense(str, enum.Enum):
    PRAESENS = "praesens"
    PRAETERITUM = "praeteritum"
    PERFEKT = "perfekt"
    PLUSQUAMPERFEKT = "plusquamperfekt"
    FUTUR_I = "futurI"
    FUTUR_II = "futurII"
    KONJUNKTIV_I_PRESENT = "konjunktivI_present"
    KONJUNKTIV_I_PAST = "konjunktivI_past"
    KONJUNKTIV_II_PRESENT = "konjunktivII_present"
    KONJUNKTIV_II_PAST = "konjunktivII_past"
    INFINITIVE = "infinitive"


class Mood(str, enum.Enum):
    INDICATIVE = "indicative"
    SUBJUNCTIVE = "subjunctive"
    IMPERATIVE = "imperative"


class Voice(str, enum.Enum):
    ACTIVE = "active"
    PASSIVE = "passive"


class Finiteness(str, enum.Enum):
    FINITE = "finite"
    GERUND = "gerund"
    TO_INFINITIVE = "to_infinitive"
    BARE_INFINITIVE = "bare_infinitive"
    PARTICIPLE = "participle"


# Display strings as they appear on report axes, one per tense value.
_EN_DISPLAY = {
    EnglishTense.PRESENT_SIMPLE: "pres",
    EnglishTense.PRESENT_PROGRESSIVE: "presProg",
    EnglishTense.PAST_SIMPLE: "past",
    EnglishTense.PAST_PROGRESSIVE: "pastProg",
    EnglishTense.PRESENT_PERFECT: "presPerf",
    EnglishTense.PRESENT_PERFECT_PROGRESSIVE: "presPerfProg",
    EnglishTense.PAST_PERFECT: "pastPerf",
    EnglishTense.PAST_PERFECT_PROGRESSIVE: "pastPerfProg",
    EnglishTense.FUTURE_I: "futureI",
    EnglishTense.FUTURE_I_PROGRESSIVE: "futureIProg",
    EnglishTense.FUTURE_II: "futureII",
    EnglishTense.FUTURE_II_PROGRESSIVE: "futureIIProg",
    EnglishTense.CONDITIONAL_I: "condI",
    EnglishTense.CONDITIONAL_I_PROGRESSIVE: "condIProg",
    EnglishTense.CONDITIONAL_II: "condII",
    EnglishTense.CONDITIONAL_II_PROGRESSIVE: "condIIProg",
    EnglishTense.GERUND: "gerund",
    EnglishTense.TO_INFINITIVE: "toInfinitive",
    EnglishTense.BARE_INFINITIVE: "bareInfinitive",
}

_DE_DISPLAY = {
    GermanTense.PRAESENS: "Präsens",
    GermanTense.PRAETERITUM: "Präteritum",
    GermanTense.PERFEKT: "Perfekt",
    GermanTense.PLUSQUAMPERFEKT: "Pluperfekt",
    GermanTense.FUTUR_I: "Futur I",
    GermanTense.FUTUR_II: "Futur II",
    GermanTense.KONJUNKTIV_I_PRESENT: "Konj I pres",
    GermanTense.KONJUNKTIV_I_PAST: "Konj I past",
    GermanTense.KONJUNKTIV_II_PRESENT: "Konj II pres",
    GermanTense.KONJUNKTIV_II_PAST: "Konj II past",
    GermanTense.INFINITIVE: "Infinitive",
}

# Axis orders used by every emitted table. Do not reorder.
EN_DISPLAY_ORDER: tuple[str, ...] = (
    "pres", "presProg", "past", "pastProg",
    "presPerf", "presPerfProg", "pastPerf", "pastPerfProg",
    "futureI", "futureIProg", "futureII", "futureIIProg",
    "condI", "condIProg", "condII", "condIIProg",
    "gerund", "toInfinitive", "bareInfinitive",
)

DE_DISPLAY_ORDER: tuple[str, ...] = (
    "Präsens", "Präteritum", "Perfekt", "Pluperfekt",
    "Futur I", "Futur II",
    "Konj I pres", "Konj I past", "Konj II pres", "Konj II past",
    "Infinitive",
)

# Collapsed variant: the four Konjunktiv labels merge pairwise.
KONJUNKTIV_COLLAPSE = {
    "Konj I pres": "Konjunktiv I",
    "Konj I past": "Konjunktiv I",
    "Konj II pres": "Konjunktiv II",
    "Konj II past": "Konjunktiv II",
}

DE_DISPLAY_ORDER_COLLAPSED: tuple[str, ...] = (
    "Präsens", "Präteritum", "Perfekt", "Pluperfekt",
    "Futur I", "Futur II", "Konjunktiv I", "Konjunktiv II", "Infinitive",
)

# Coarse time base shown in per-VC annotation views; the Konjunktiv labels
# factor into (base tense, subjunctive mood).
_EN_BASE = {
    EnglishTense.PRESENT_SIMPLE: "present",
    EnglishTense.PRESENT_PROGRESSIVE: "present",
    EnglishTense.PRESENT_PERFECT: "present",
    EnglishTense.PRESENT_PERFECT_PROGRESSIVE: "present",
    EnglishTense.PAST_SIMPLE: "past",
    EnglishTense.PAST_PROGRESSIVE: "past",
    EnglishTense.PAST_PERFECT: "past",
    EnglishTense.PAST_PERFECT_PROGRESSIVE: "past",
    EnglishTense.FUTURE_I: "future",
    EnglishTense.FUTURE_I_PROGRESSIVE: "future",
    EnglishTense.FUTURE_II: "future",
    EnglishTense.FUTURE_II_PROGRESSIVE: "future",
    EnglishTense.CONDITIONAL_I: "conditional",
    EnglishTense.CONDITIONAL_I_PROGRESSIVE: "conditional",
    EnglishTense.CONDITIONAL_II: "conditional",
    EnglishTense.CONDITIONAL_II_PROGRESSIVE: "conditional",
    EnglishTense.GERUND: "gerund",
    EnglishTense.TO_INFINITIVE: "toInfinitive",
    EnglishTense.BARE_INFINITIVE: "bareInfinitive",
}

_DE_BASE = {
    GermanTense.PRAESENS: "present",
    GermanTense.PRAETERITUM: "past",
    GermanTense.PERFEKT: "perfect",
    GermanTense.PLUSQUAMPERFEKT: "pluperfect",
    GermanTense.FUTUR_I: "future I",
    GermanTense.FUTUR_II: "future II",
    GermanTense.KONJUNKTIV_I_PRESENT: "present",
    GermanTense.KONJUNKTIV_I_PAST: "past",
    GermanTense.KONJUNKTIV_II_PRESENT: "present",
    GermanTense.KONJUNKTIV_II_PAST: "past",
    GermanTense.INFINITIVE: "infinitive",
}

SUBJUNCTIVE_TENSES = frozenset({
    GermanTense.KONJUNKTIV_I_PRESENT,
    GermanTense.KONJUNKTIV_I_PAST,
    GermanTense.KONJUNKTIV_II_PRESENT,
    GermanTense.KONJUNKTIV_II_PAST,
})


@dataclass(frozen=True)
class TMVLabel:
    """Complete tense/mood/voice decision for one verbal complex.

    `notes` carries diagnostic flags ("unrecognized-chain", "statal-passive",
    "no-morph", "carried-context", ...). A note marks low confidence, never
    the absence of a label.
    """

    language: Language
    tense: EnglishTense | GermanTense
    mood: Mood = Mood.INDICATIVE
    voice: Voice = Voice.ACTIVE
    finiteness: Finiteness = Finiteness.FINITE
    progressive: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def display(self) -> str:
        return display_label(self)

    @property
    def base_tense(self) -> str:
        table = _EN_BASE if self.language is Language.EN else _DE_BASE
        return table[self.tense]


def display_label(label: TMVLabel | EnglishTense | GermanTense) -> str:
    """Map a tense value (or a full label) to its display string."""
    tense = label.tense if isinstance(label, TMVLabel) else label
    if isinstance(tense, EnglishTense):
        return _EN_DISPLAY[tense]
    if isinstance(tense, GermanTense):
        return _DE_DISPLAY[tense]
    raise TypeError(f"not a tense value: {tense!r}")


def display_order(language: Language, collapse_konjunktiv: bool = False) -> tuple[str, ...]:
    if language is Language.EN:
        return EN_DISPLAY_ORDER
    if collapse_konjunktiv:
        return DE_DISPLAY_ORDER_COLLAPSED
    return DE_DISPLAY_ORDER


def collapse_display(label: str) -> str:
    """Collapsed-axis form of a German display label (identity otherwise)."""
    return KONJUNKTIV_COLLAPSE.get(label, label)


def tense_from_display(language: Language, display: str) -> EnglishTense | GermanTense:
    table = _EN_DISPLAY if language is Language.EN else _DE_DISPLAY
    for tense, shown in table.items():
        if shown == display:
            return tense
    valid = ", ".join(table.values())
    raise ValueError(f"unknown {language.value} label {display!r}; valid labels: {valid}")


def all_display_labels() -> frozenset[str]:
    return frozenset(_EN_DISPLAY.values()) | frozenset(_DE_DISPLAY.values())
